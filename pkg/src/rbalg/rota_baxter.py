"""Rota-Baxter operators: verification, construction, induced algebras and towers.

An operator R of weight w satisfies R(x)R(y) = R(R(x)y + xR(y) + w xy).
The induced product is x∘y = R(x)y + xR(y) + w xy; iterating it gives the
tower of algebras on the same space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import Algebra, Decomposition, Kind, Law, check_identities, multiply, substructure_witness
from .errors import (BudgetExceeded, CheckFailed, DimensionMismatch, FieldError, LawViolation,
                     NotSubalgebra, RBVerificationError, UnsupportedField, WeightError)
from .field import PrimeField
from .linalg import Matrix, Subspace, char_poly, inverse, kernel_image, vadd, vscale, vsub
from .report import Report, Violation, scan

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class RBOperator:
    matrix: Matrix
    weight: object

    def __post_init__(self):
        if not self.matrix.is_square:
            raise DimensionMismatch("a Rota-Baxter operator must be a square matrix")
        object.__setattr__(self, "weight", self.matrix.field(self.weight))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def field(self):
        return self.matrix.field

    def __call__(self, v) -> tuple:
        return self.matrix.apply(v)

    def shifted(self) -> Matrix:
        """R + weight * id."""
        return self.matrix + Matrix.identity(self.dim, self.field).scale(self.weight)

    @classmethod
    def zero(cls, dim: int, field, weight) -> "RBOperator":
        return cls(Matrix.zeros(dim, dim, field), weight)

    @classmethod
    def scalar(cls, dim: int, field, c, weight) -> "RBOperator":
        return cls(Matrix.identity(dim, field).scale(c), weight)


def trivial_operators(a: Algebra, weight) -> tuple[RBOperator, RBOperator]:
    """R = 0 and R = -weight * id, which satisfy the identity on every algebra."""
    w = a.field(weight)
    return RBOperator.zero(a.dim, a.field, w), RBOperator.scalar(a.dim, a.field, -w, w)


def _check_pair(a: Algebra, r: RBOperator):
    if r.dim != a.dim:
        raise DimensionMismatch(f"{r.dim}x{r.dim} operator on a {a.dim}-dim algebra")
    if r.field != a.field:
        raise FieldError(f"operator over {r.field}, algebra over {a.field}")


def rb_residual(a: Algebra, r: RBOperator, i: int, j: int) -> tuple:
    """R(b_i)R(b_j) - R(R(b_i)b_j + b_iR(b_j) + w b_ib_j)."""
    ri, rj = r.matrix.col(i), r.matrix.col(j)
    inner = vadd(vadd(multiply(a, ri, a.basis(j)), multiply(a, a.basis(i), rj)),
                 vscale(r.weight, a.basis_product(i, j)))
    return vsub(multiply(a, ri, rj), r(inner))


def verify_rb(a: Algebra, r: RBOperator) -> Report:
    _check_pair(a, r)
    return Report("rota-baxter", scan("rb", a.dim, 2, lambda i, j: rb_residual(a, r, i, j)),
                  {"weight": r.weight})


def _require_rb(a: Algebra, r: RBOperator):
    report = verify_rb(a, r)
    if not report.passed:
        raise RBVerificationError("operator fails the Rota-Baxter identity", report)


def from_splitting(a: Algebra, s1: Subspace, s2: Subspace) -> RBOperator:
    """Weight-1 operator -π₂ for a direct splitting a = s1 ⊕ s2 into subalgebras.

    R vanishes on s1 and acts as -id on s2.
    """
    for name, s in (("s1", s1), ("s2", s2)):
        w = substructure_witness(a, s, "subalgebra")
        if w is not None:
            raise NotSubalgebra(f"{name} is not a subalgebra", witness=w)
    if s1.dim + s2.dim != a.dim:
        raise ValueError(f"dimensions {s1.dim} + {s2.dim} do not add up to {a.dim}")
    basis = s1.vectors() + s2.vectors()
    change = Matrix.from_columns(basis, a.field, a.dim)
    try:
        inv = inverse(change)
    except ZeroDivisionError:
        raise ValueError("s1 and s2 do not form a direct sum") from None
    proj = Matrix.from_rows([[(-1 if (i == j and i >= s1.dim) else 0) for j in range(a.dim)]
                             for i in range(a.dim)], a.field)
    return RBOperator(change @ proj @ inv, 1)


def _induced_product(a: Algebra, r: RBOperator, i: int, j: int) -> tuple:
    ri, rj = r.matrix.col(i), r.matrix.col(j)
    return vadd(vadd(multiply(a, ri, a.basis(j)), multiply(a, a.basis(i), rj)),
                vscale(r.weight, a.basis_product(i, j)))


def induced_product_algebra(a: Algebra, r: RBOperator) -> Algebra:
    """x∘y = R(x)y + xR(y) + w xy as an algebra of kind general (no checks)."""
    _check_pair(a, r)
    return Algebra.from_products(a.dim, a.field, Kind.GENERAL,
                                 lambda i, j: _induced_product(a, r, i, j), a.labels)


def induced_algebra(a: Algebra, r: RBOperator) -> Algebra:
    """The induced algebra, re-verified to satisfy the law of ``a``."""
    _require_rb(a, r)
    raw = induced_product_algebra(a, r)
    if a.kind is Kind.GENERAL:
        return raw
    law = Law.LIE if a.kind is Kind.LIE else Law.ASSOCIATIVITY
    report = check_identities(raw, law)
    if not report.passed:
        raise LawViolation("induced product leaves the variety", report)
    return raw.with_kind(a.kind, check=False)


def homomorphism_report(source: Algebra, target: Algebra, maps: dict[str, Matrix]) -> Report:
    """Check f(x*y) = f(x)f(y) for each named linear map, source -> target."""
    violations = []
    for name, f in maps.items():
        def res(i, j, f=f):
            return vsub(f.apply(source.basis_product(i, j)),
                        multiply(target, f.col(i), f.col(j)))
        violations += scan(name, source.dim, 2, res)
    return Report("homomorphism", violations)


def check_rb_homomorphisms(a: Algebra, r: RBOperator, strict: bool = True) -> Report:
    """R and R + w·id as maps from the induced algebra back to ``a``.

    With ``strict`` a failing Rota-Baxter identity raises; otherwise the
    homomorphism report is returned for any operator.
    """
    if strict:
        _require_rb(a, r)
    induced = induced_product_algebra(a, r)
    return homomorphism_report(induced, a, {"R": r.matrix, "R+w": r.shifted()})


def image_decomposition(a: Algebra, r: RBOperator) -> Decomposition:
    """a = im(R) + im(R + id) for a weight-1 operator."""
    if r.weight != 1:
        raise WeightError("image decomposition requires weight 1")
    _require_rb(a, r)
    return Decomposition(a, kernel_image(r.matrix)[1], kernel_image(r.shifted())[1])


@dataclass(frozen=True)
class Tower:
    base: Algebra
    rb: RBOperator
    levels: tuple
    homomorphisms: tuple = field(default=(), compare=False)

    @property
    def steps(self) -> int:
        return len(self.levels) - 1


def tower(a: Algebra, r: RBOperator, steps: int) -> Tower:
    """levels[i+1] is the algebra induced on levels[i] by the same operator.

    Every level re-verifies the RB identity, the law of ``a``, and that R and
    R + w·id are homomorphisms levels[i+1] -> levels[i].
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    levels = [a]
    homs = []
    for i in range(steps):
        cur = levels[-1]
        rep = verify_rb(cur, r)
        if not rep.passed:
            raise RBVerificationError(f"operator is not Rota-Baxter on level {i}", rep)
        raw = induced_product_algebra(cur, r)
        if a.kind is not Kind.GENERAL:
            law = Law.LIE if a.kind is Kind.LIE else Law.ASSOCIATIVITY
            rep = check_identities(raw, law)
            if not rep.passed:
                raise LawViolation(f"level {i + 1} violates the {law.value} law", rep)
            raw = raw.with_kind(a.kind, check=False)
        hom = homomorphism_report(raw, cur, {"R": r.matrix, "R+w": r.shifted()})
        if not hom.passed:
            raise CheckFailed(f"R or R+w is not a homomorphism from level {i + 1} to level {i}", hom)
        homs.append(hom)
        levels.append(raw)
    return Tower(a, r, tuple(levels), tuple(homs))


def kernel_chain(t: Tower, i: int) -> Report:
    """ker(R^i) and ker((R + w·id)^i) must be ideals of every level j >= i."""
    if not 1 <= i <= t.steps:
        raise IndexError(f"chain index {i} outside 1..{t.steps}")
    kernels = {
        "ker(R^i)": kernel_image(t.rb.matrix.power(i))[0],
        "ker((R+w)^i)": kernel_image(t.rb.shifted().power(i))[0],
    }
    violations = []
    for j in range(i, t.steps + 1):
        for name, k in kernels.items():
            w = substructure_witness(t.levels[j], k, "ideal")
            if w is not None:
                _, p, q = w
                violations.append(Violation(name, (j, p, q), k.vectors()[p]))
    return Report("kernel-chain", violations, {"i": i, "dims": {n: k.dim for n, k in kernels.items()}})


def spectrum_check(r: RBOperator) -> bool:
    """True iff the characteristic polynomial is t^a (t+1)^b."""
    poly = list(char_poly(r.matrix))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    b = len(poly) - 1
    # (t+1)^b has coefficients binomial(b, k), leading first
    coeff = 1
    for k in range(b + 1):
        if poly[k] != coeff:
            return False
        coeff = coeff * (b - k) // (k + 1)
    return True


def search_rb_exhaustive(a: Algebra, weight, budget: int = DEFAULT_BUDGET) -> list[RBOperator]:
    """All RB operators of the given weight on an algebra over F_p.

    Columns R(b_0), R(b_1), ... are chosen depth first; the identity for a
    basis pair is tested as soon as every column it touches is fixed.  The
    result is sorted lexicographically by row-major entries.
    """
    F = a.field
    if not isinstance(F, PrimeField):
        raise UnsupportedField("exhaustive search requires a prime field")
    n, p = a.dim, F.p
    if p ** (n * n) > budget:
        raise BudgetExceeded(f"{p}^{n * n} candidates exceed the budget of {budget}")
    w = F(weight)
    vectors = [F.vector(v) for v in product(range(p), repeat=n)]
    cols: list[tuple] = []
    found = []

    def apply(v):
        out = [F.zero] * n
        for k, x in enumerate(v):
            if x != 0:
                for r in range(n):
                    out[r] += cols[k][r] * x
        return tuple(out)

    def consistent(c: int) -> bool:
        for i in range(c + 1):
            for j in range(c + 1):
                inner = vadd(vadd(multiply(a, cols[i], a.basis(j)), multiply(a, a.basis(i), cols[j])),
                             vscale(w, a.basis_product(i, j)))
                support = [k for k, x in enumerate(inner) if x != 0]
                if max([i, j] + support) != c:
                    continue
                if multiply(a, cols[i], cols[j]) != apply(inner):
                    return False
        return True

    def dfs(c: int):
        if c == n:
            found.append(RBOperator(Matrix.from_columns(cols, F, n), w))
            return
        for v in vectors:
            cols.append(v)
            if consistent(c):
                dfs(c + 1)
            cols.pop()

    dfs(0)
    return sorted(found, key=lambda r: tuple(int(x) for x in r.matrix.entries))


def lift_to_rationals(r: RBOperator, target: Algebra) -> RBOperator | None:
    """Lift F_p entries to symmetric integer representatives; keep the lift only if it is RB over Q."""
    if not isinstance(r.field, PrimeField):
        raise UnsupportedField("lifting starts from a prime field")
    p = r.field.p

    def sym(x):
        v = int(x)
        return v - p if v > p // 2 else v

    lifted = RBOperator(Matrix(r.dim, r.dim, target.field, tuple(sym(x) for x in r.matrix.entries)),
                        sym(r.weight))
    return lifted if verify_rb(target, lifted).passed else None
