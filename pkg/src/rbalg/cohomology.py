"""First cohomology (Z^1, B^1) for Lie modules and associative bimodules.

A 1-cochain d is stored as an ``mdim x dim`` matrix whose column i is d(b_i).
Z^1 and B^1 live in the flattened coefficient space, column-major: entry r of
d(b_i) sits at index ``i * mdim + r``.

Conventions: Lie cocycles satisfy d([x,y]) = x.d(y) - y.d(x), coboundaries are
x -> x.m. Hochschild cocycles satisfy d(xy) = d(x).y + x.d(y), coboundaries
are x -> x.m - m.x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, Kind, is_semisimple, left_matrix, right_matrix
from .catalog import classical_matrices, make_classical_lie
from .errors import CheckFailed, DimensionMismatch, KindError
from .field import Field
from .linalg import Matrix, Subspace, _nullspace, solve
from .post import from_rb_assoc, from_rb_lie
from .report import Report, scan
from .rota_baxter import RBOperator, _require_rb


def _combo(mats: list[Matrix], coeffs, mdim: int, field: Field) -> Matrix:
    out = Matrix.zeros(mdim, mdim, field)
    for c, m in zip(coeffs, mats):
        if c != 0:
            out = out + m.scale(c)
    return out


def _check_actions(alg: Algebra, mdim: int, mats, what: str) -> tuple:
    mats = tuple(mats)
    if len(mats) != alg.dim:
        raise DimensionMismatch(f"{what}: need one matrix per basis vector ({alg.dim}), got {len(mats)}")
    for m in mats:
        if (m.rows, m.cols) != (mdim, mdim):
            raise DimensionMismatch(f"{what}: action matrices must be {mdim}x{mdim}")
        if m.field != alg.field:
            raise DimensionMismatch(f"{what}: action matrices over the wrong field")
    return mats


def _flat(m: Matrix) -> tuple:
    return tuple(x for j in range(m.cols) for x in m.col(j))


@dataclass(frozen=True)
class Representation:
    """Lie module: ``action[i]`` is the matrix of b_i acting on M."""

    alg: Algebra
    mdim: int
    action: tuple

    def __post_init__(self):
        if self.alg.kind is not Kind.LIE:
            raise KindError("representations are over Lie algebras")
        object.__setattr__(self, "action", _check_actions(self.alg, self.mdim, self.action, "representation"))
        report = self.check()
        if not report.passed:
            raise CheckFailed("action is not a Lie algebra homomorphism", report)

    def rho(self, x) -> Matrix:
        return _combo(self.action, x, self.mdim, self.alg.field)

    def check(self) -> Report:
        rho = self.action

        def hom(i, j):
            lhs = self.rho(self.alg.basis_product(i, j))
            return _flat(lhs - (rho[i] @ rho[j] - rho[j] @ rho[i]))

        pairs = [(i, j) for i in range(self.alg.dim) for j in range(i + 1, self.alg.dim)]
        return Report("representation", scan("hom", self.alg.dim, 2, hom, pairs))


@dataclass(frozen=True)
class Bimodule:
    """Associative bimodule; ``right[i]`` is the matrix of m -> m.b_i."""

    alg: Algebra
    mdim: int
    left: tuple
    right: tuple

    def __post_init__(self):
        if self.alg.kind is not Kind.ASSOCIATIVE:
            raise KindError("bimodules are over associative algebras")
        object.__setattr__(self, "left", _check_actions(self.alg, self.mdim, self.left, "bimodule"))
        object.__setattr__(self, "right", _check_actions(self.alg, self.mdim, self.right, "bimodule"))
        report = self.check()
        if not report.passed:
            raise CheckFailed("actions do not form a bimodule", report)

    def act_left(self, x) -> Matrix:
        return _combo(self.left, x, self.mdim, self.alg.field)

    def act_right(self, x) -> Matrix:
        return _combo(self.right, x, self.mdim, self.alg.field)

    def check(self) -> Report:
        a, L, Rt = self.alg, self.left, self.right
        n = a.dim
        out = scan("left", n, 2, lambda i, j: _flat(self.act_left(a.basis_product(i, j)) - L[i] @ L[j]))
        out += scan("right", n, 2, lambda i, j: _flat(self.act_right(a.basis_product(i, j)) - Rt[j] @ Rt[i]))
        out += scan("commute", n, 2, lambda i, j: _flat(L[i] @ Rt[j] - Rt[j] @ L[i]))
        return Report("bimodule", out)


@dataclass(frozen=True)
class Cocycle:
    """A 1-cochain, column i = d(b_i)."""

    map: Matrix

    @classmethod
    def from_vector(cls, v, mdim: int, dim: int, field: Field) -> "Cocycle":
        if len(v) != mdim * dim:
            raise DimensionMismatch("flattened cochain has the wrong length")
        return cls(Matrix.from_columns([v[i * mdim:(i + 1) * mdim] for i in range(dim)], field, mdim))

    def vector(self) -> tuple:
        return _flat(self.map)

    def __call__(self, x) -> tuple:
        return self.map.apply(x)

    def __add__(self, other: "Cocycle") -> "Cocycle":
        return Cocycle(self.map + other.map)


def trivial_representation(alg: Algebra, mdim: int = 1) -> Representation:
    return Representation(alg, mdim, tuple(Matrix.zeros(mdim, mdim, alg.field) for _ in range(alg.dim)))


def adjoint_representation(alg: Algebra) -> Representation:
    return Representation(alg, alg.dim, tuple(left_matrix(alg, alg.basis(i)) for i in range(alg.dim)))


def natural_representation(family: str, n: int, field: Field) -> Representation:
    """Defining representation of a classical matrix Lie algebra from the catalog."""
    alg = make_classical_lie(family, n, field)
    mats, _ = classical_matrices(family, n)
    return Representation(alg, len(mats[0]), tuple(Matrix.from_rows(m, field) for m in mats))


def regular_bimodule(alg: Algebra) -> Bimodule:
    return Bimodule(alg, alg.dim,
                    tuple(left_matrix(alg, alg.basis(i)) for i in range(alg.dim)),
                    tuple(right_matrix(alg, alg.basis(i)) for i in range(alg.dim)))


def zero_bimodule(alg: Algebra, mdim: int = 1) -> Bimodule:
    zero = tuple(Matrix.zeros(mdim, mdim, alg.field) for _ in range(alg.dim))
    return Bimodule(alg, mdim, zero, zero)


def _cocycle_system(alg: Algebra, mdim: int, terms) -> Subspace:
    """Kernel of the linear constraints; ``terms(i, j)`` lists (matrix, k) pairs
    meaning that the constraint for (i, j) contains ``matrix @ d(b_k)``."""
    field, n = alg.field, alg.dim
    rows = []
    for i in range(n):
        for j in range(n):
            block = [[field.zero] * (mdim * n) for _ in range(mdim)]
            for mat, k in terms(i, j):
                for r in range(mdim):
                    for s in range(mdim):
                        c = mat[r, s]
                        if c != 0:
                            block[r][k * mdim + s] += c
            rows.extend(block)
    return Subspace.span(_nullspace(rows, mdim * n, field), mdim * n, field)


def _scalar_terms(alg: Algebra, mdim: int, i: int, j: int):
    ident = Matrix.identity(mdim, alg.field)
    return [(ident.scale(c), k) for k, c in alg.table[i][j]]


def z1_b1_lie(rep: Representation) -> tuple[Subspace, Subspace]:
    alg, m, field = rep.alg, rep.mdim, rep.alg.field
    rho = rep.action

    def terms(i, j):
        return _scalar_terms(alg, m, i, j) + [(-rho[i], j), (rho[j], i)]

    z1 = _cocycle_system(alg, m, terms)
    b1 = Subspace.span([tuple(x for i in range(alg.dim) for x in rho[i].col(s)) for s in range(m)],
                       m * alg.dim, field)
    return z1, b1


def z1_b1_assoc(bim: Bimodule) -> tuple[Subspace, Subspace]:
    alg, m, field = bim.alg, bim.mdim, bim.alg.field
    L, Rt = bim.left, bim.right

    def terms(i, j):
        return _scalar_terms(alg, m, i, j) + [(-Rt[j], i), (-L[i], j)]

    z1 = _cocycle_system(alg, m, terms)
    inner = [L[i] - Rt[i] for i in range(alg.dim)]
    b1 = Subspace.span([tuple(x for i in range(alg.dim) for x in inner[i].col(s)) for s in range(m)],
                       m * alg.dim, field)
    return z1, b1


def h1_dim(z1: Subspace, b1: Subspace) -> int:
    return z1.dim - b1.dim


def _require_cocycle(z1: Subspace, d: Cocycle, what: str):
    if d.vector() not in z1:
        raise CheckFailed(f"cochain is not a cocycle in {what}",
                          Report("cocycle", scan("cocycle", 1, 1, lambda _: d.vector())))


def _twist(mats, r: RBOperator, mdim: int, field: Field) -> tuple:
    return tuple(_combo(mats, r.matrix.col(i), mdim, field) for i in range(r.dim))


def twist_and_pullback_lie(rep: Representation, r: RBOperator, d: Cocycle) -> tuple[Representation, Cocycle]:
    """rho_g(x) = rho_n(R x) and d_R = d o R, both verified over the induced g."""
    n = rep.alg
    _require_rb(n, r)
    _require_cocycle(z1_b1_lie(rep)[0], d, "Z1(n, M)")
    g = from_rb_lie(n, r).g
    twisted = Representation(g, rep.mdim, _twist(rep.action, r, rep.mdim, n.field))
    dr = Cocycle(d.map @ r.matrix)
    _require_cocycle(z1_b1_lie(twisted)[0], dr, "Z1(g, M_R)")
    return twisted, dr


def twist_and_pullback_assoc(bim: Bimodule, r: RBOperator, d: Cocycle) -> tuple[Bimodule, Cocycle]:
    """x._A m = R(x)._B m, m._A x = m._B R(x), d_R = d o R; verified over A."""
    B = bim.alg
    _require_rb(B, r)
    _require_cocycle(z1_b1_assoc(bim)[0], d, "Z1(B, M)")
    A = from_rb_assoc(B, r).A
    twisted = Bimodule(A, bim.mdim, _twist(bim.left, r, bim.mdim, B.field), _twist(bim.right, r, bim.mdim, B.field))
    dr = Cocycle(d.map @ r.matrix)
    _require_cocycle(z1_b1_assoc(twisted)[0], dr, "Z1(A, M_R)")
    return twisted, dr


def whitehead_split(rep: Representation, d: Cocycle) -> tuple:
    """A vector m with d(x) = x.m; exists since H^1 vanishes for semisimple g."""
    g = rep.alg
    if not is_semisimple(g):
        raise CheckFailed("whitehead_split needs a semisimple Lie algebra")
    _require_cocycle(z1_b1_lie(rep)[0], d, "Z1(g, M)")
    rows, rhs = [], []
    for i in range(g.dim):
        rows.extend(rep.action[i].tolist())
        rhs.extend(d.map.col(i))
    m = solve(Matrix.from_rows(rows, g.field, cols=rep.mdim), rhs)
    if m is None:
        raise CheckFailed("no splitting vector although g is semisimple")
    return m


__all__ = [
    "Bimodule", "Cocycle", "Representation", "adjoint_representation", "h1_dim", "natural_representation",
    "regular_bimodule", "trivial_representation", "twist_and_pullback_assoc", "twist_and_pullback_lie",
    "whitehead_split", "z1_b1_assoc", "z1_b1_lie", "zero_bimodule",
]
