"""Sums of two subalgebras: verification, named instances and nilpotency checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    Algebra, Decomposition, Fingerprint, Kind, ad, generated_subalgebra, invariant_fingerprint, is_abelian,
    is_nilpotent_assoc, is_perfect_lie, is_semisimple, multiply, nilpotency_index, restrict,
)
from .catalog import embed_so_on, embed_so_stabilizer, make_g2, make_semidirect_sln_vn, make_spin7, make_upper_triangular
from .errors import AlgebraError, CheckFailed, DecompositionError, KindError, UnsupportedField
from .field import QQ, Field
from .linalg import Matrix, Subspace, is_zero_vector, subspace_intersect
from .report import Report, Violation, scan
from .rota_baxter import RBOperator, _require_rb, induced_algebra, tower


@dataclass(frozen=True)
class DecompositionReport:
    is_sum: bool
    is_proper: bool
    is_direct: bool
    intersection: Subspace

    @property
    def intersection_dim(self) -> int:
        return self.intersection.dim


def verify_decomposition(d: Decomposition) -> DecompositionReport:
    n = d.ambient.dim
    inter = subspace_intersect(d.s1, d.s2)
    return DecompositionReport(
        is_sum=d.sum.is_full(),
        is_proper=d.s1.dim < n and d.s2.dim < n,
        is_direct=inter.is_zero(),
        intersection=inter,
    )


@dataclass(frozen=True)
class ComponentInfo:
    fingerprint: Fingerprint
    semisimple: bool | None
    abelian: bool
    nilpotent: bool | None


def _component_info(a: Algebra) -> ComponentInfo:
    fp = invariant_fingerprint(a)
    nilpotent = is_nilpotent_assoc(a) if a.kind is Kind.ASSOCIATIVE else None
    return ComponentInfo(fp, fp.semisimple, is_abelian(a), nilpotent)


def classify_components(d: Decomposition) -> dict[str, ComponentInfo]:
    """Invariants of the ambient algebra, both components and their intersection."""
    inter = subspace_intersect(d.s1, d.s2)
    parts = {"ambient": d.ambient, "s1": restrict(d.ambient, d.s1), "s2": restrict(d.ambient, d.s2),
             "intersection": restrict(d.ambient, inter)}
    return {name: _component_info(a) for name, a in parts.items()}


INSTANCES = ("B3=G2+B2", "B3=G2+B2T", "B3=G2+D3", "D4=B3+B3")
FEATURE_GATED = {"D4=B3+B3": "d4"}


def onishchik_instance(name: str, features=()) -> Decomposition:
    """Named sums of two proper subalgebras of so(7) (and so(8) behind ``d4``)."""
    if name not in INSTANCES:
        raise AlgebraError(f"unknown instance {name!r}; choose from {', '.join(INSTANCES)}")
    flag = FEATURE_GATED.get(name)
    if flag and flag not in features:
        raise AlgebraError(f"instance {name!r} needs --features {flag}")
    if name == "D4=B3+B3":
        spin = make_spin7()
        block = embed_so_on([tuple(range(1, 8))], 8)
        return Decomposition(spin.target, spin.image, block.image)
    g2 = make_g2()
    block = {
        "B3=G2+B2": embed_so_stabilizer(5, 7),
        "B3=G2+B2T": embed_so_stabilizer(5, 7, torus=True),
        "B3=G2+D3": embed_so_stabilizer(6, 7),
    }[name]
    return Decomposition(g2.target, g2.image, block.image)


def _automorphism_report(a: Algebra, phi: Matrix) -> Report:
    return Report("automorphism", scan(
        "hom", a.dim, 2,
        lambda i, j: tuple(x - y for x, y in zip(phi.apply(a.basis_product(i, j)),
                                                  multiply(a, phi.col(i), phi.col(j))))))


def counterexample_data(n: int, field: Field = QQ) -> tuple[Algebra, tuple, Matrix]:
    """sl_n ⋉ V(n), x = v_1 + ... + v_n and phi = id + ad(x), all verified."""
    if field.characteristic != 0:
        raise UnsupportedField("the counterexample is built over Q")
    L = make_semidirect_sln_vn(n, field)
    k = n * n - 1
    x = field.vector([0] * k + [1] * n)
    adx = ad(L, x)
    if not (adx @ adx).is_zero():
        raise CheckFailed("ad(x)^2 is not zero")
    phi = Matrix.identity(L.dim, field) + adx
    report = _automorphism_report(L, phi)
    if not report.passed:
        raise CheckFailed("id + ad(x) is not an automorphism", report)
    return L, x, phi


def counterexample(n: int, field: Field = QQ) -> Decomposition:
    """sl_n + phi(sl_n) = sl_n ⋉ V(n): two semisimple summands, non-semisimple sum."""
    L, _, phi = counterexample_data(n, field)
    k = n * n - 1
    s1 = Subspace.span([L.basis(i) for i in range(k)], L.dim, field)
    s2 = Subspace.span([phi.col(i) for i in range(k)], L.dim, field)
    return Decomposition(L, s1, s2)


def counterexample_summary(n: int) -> dict:
    d = counterexample(n)
    v = verify_decomposition(d)
    return {
        "n": n,
        "ambient_dim": d.ambient.dim,
        "s1_dim": d.s1.dim,
        "s2_dim": d.s2.dim,
        "intersection_dim": v.intersection_dim,
        "is_sum": v.is_sum,
        "s1_semisimple": is_semisimple(restrict(d.ambient, d.s1)),
        "s2_semisimple": is_semisimple(restrict(d.ambient, d.s2)),
        "ambient_perfect": is_perfect_lie(d.ambient),
        "ambient_semisimple": is_semisimple(d.ambient),
    }


def mutual_ideals_check(d: Decomposition) -> bool:
    """For a direct decomposition: do the two summands multiply to zero?"""
    if not verify_decomposition(d).is_direct:
        raise DecompositionError("mutual ideal check needs a direct decomposition")
    a = d.ambient
    for u in d.s1.vectors():
        for v in d.s2.vectors():
            if not is_zero_vector(multiply(a, u, v)) or not is_zero_vector(multiply(a, v, u)):
                return False
    return True


def nilpotent_sum_check(d: Decomposition) -> Report:
    """Kegel: a sum of two nilpotent associative subalgebras is nilpotent.

    The report carries the three nilpotency indices (None when not nilpotent)
    and a ``kegel`` violation only if the theorem would be contradicted.
    """
    a = d.ambient
    if a.kind is not Kind.ASSOCIATIVE:
        raise KindError("nilpotent sum check needs an associative ambient algebra")
    idx = {
        "s1": nilpotency_index(restrict(a, d.s1)),
        "s2": nilpotency_index(restrict(a, d.s2)),
        "ambient": nilpotency_index(a),
    }
    is_sum = d.sum.is_full()
    violations = []
    if is_sum and idx["s1"] is not None and idx["s2"] is not None and idx["ambient"] is None:
        violations.append(Violation("kegel", (), ()))
    return Report("nilpotent-sum", violations, {"indices": idx, "is_sum": is_sum})


def random_nilpotent_pair(rng: random.Random, n: int, field: Field = QQ) -> Decomposition:
    """Two subalgebras of the strictly upper triangular n x n matrices whose sum is everything.

    s1 is generated by a couple of random vectors; s2 by random vectors plus
    the coordinate vectors missing from s1's pivots, so s1 + s2 spans.
    """
    a = make_upper_triangular(n, field, strict=True)

    def rand_vec():
        return field.vector([rng.randint(-2, 2) for _ in range(a.dim)])

    s1 = generated_subalgebra(a, [rand_vec() for _ in range(rng.randint(1, 2))])
    missing = [a.basis(i) for i in range(a.dim) if i not in s1.pivots]
    s2 = generated_subalgebra(a, missing + [rand_vec() for _ in range(rng.randint(0, 1))])
    return Decomposition(a, s1, s2)


def rb_tower_nonnilpotence(b: Algebra, r: RBOperator, steps: int) -> Report:
    """Every level of the tower over a semisimple B must be non-nilpotent."""
    if b.kind is not Kind.ASSOCIATIVE:
        raise KindError("tower nilpotency check needs an associative algebra")
    if not is_semisimple(b):
        raise CheckFailed("base algebra is not semisimple")
    t = tower(b, r, steps)
    indices = [nilpotency_index(level) for level in t.levels]
    violations = [Violation("nilpotent", (j,), ()) for j, k in enumerate(indices) if k is not None]
    return Report("tower-nonnilpotence", violations, {"levels": len(t.levels)})


def semisimplicity_transfer(a: Algebra, r: RBOperator) -> Report:
    """If the induced algebra is semisimple then so is the base algebra."""
    _require_rb(a, r)
    induced = is_semisimple(induced_algebra(a, r))
    base = is_semisimple(a)
    violations = [Violation("transfer", (), ())] if induced and not base else []
    return Report("semisimplicity-transfer", violations, {"induced_semisimple": induced, "base_semisimple": base})


__all__ = [
    "ComponentInfo", "DecompositionReport", "INSTANCES", "classify_components", "counterexample",
    "counterexample_data", "counterexample_summary", "mutual_ideals_check", "nilpotent_sum_check",
    "onishchik_instance", "random_nilpotent_pair", "rb_tower_nonnilpotence", "semisimplicity_transfer",
    "verify_decomposition",
]
