"""Post-Lie and post-associative structures on pairs of algebras.

Product tensors (``prod``, ``succ``, ``prec``) are stored as algebras of kind
general on the same space, so they share the structure-constant machinery.
Identity names follow the usual numbering: post1-post3 for post-Lie,
postAs1-postAs7 for post-associative (postAs7 is the derived one).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Algebra, Kind, commutator_algebra, multiply
from .errors import CheckFailed, DimensionMismatch, FieldError, KindError, NotRBDerived, UnsupportedField, WeightError
from .linalg import Matrix, solve, vadd, vsub
from .report import Report, scan
from .rota_baxter import RBOperator, _require_rb, induced_algebra, verify_rb


def _same_space(*algs: Algebra):
    a0 = algs[0]
    for a in algs[1:]:
        if a.dim != a0.dim:
            raise DimensionMismatch("all products must live on the same space")
        if a.field != a0.field:
            raise FieldError("all products must be over the same field")


def product_tensor(dim: int, field, prod) -> Algebra:
    """Bilinear product ``prod(i, j) -> vector`` wrapped as a general algebra."""
    return Algebra.from_products(dim, field, Kind.GENERAL, prod)


@dataclass(frozen=True)
class PostLieStructure:
    g: Algebra
    n: Algebra
    prod: Algebra

    def __post_init__(self):
        _same_space(self.g, self.n, self.prod)
        for name, a in (("g", self.g), ("n", self.n)):
            if a.kind is not Kind.LIE:
                raise KindError(f"{name} must be a Lie algebra")

    @property
    def dim(self) -> int:
        return self.g.dim


@dataclass(frozen=True)
class PostAssocStructure:
    A: Algebra
    B: Algebra
    succ: Algebra
    prec: Algebra

    def __post_init__(self):
        _same_space(self.A, self.B, self.succ, self.prec)
        for name, a in (("A", self.A), ("B", self.B)):
            if a.kind is not Kind.ASSOCIATIVE:
                raise KindError(f"{name} must be associative")

    @property
    def dim(self) -> int:
        return self.A.dim


def verify_post_lie(p: PostLieStructure) -> Report:
    g, n, pr = p.g, p.n, p.prod
    d = p.dim
    e = g.basis
    m = multiply

    def post1(i, j):
        lhs = vsub(pr.basis_product(i, j), pr.basis_product(j, i))
        return vsub(lhs, vsub(g.basis_product(i, j), n.basis_product(i, j)))

    def post2(i, j, k):
        lhs = m(pr, g.basis_product(i, j), e(k))
        rhs = vsub(m(pr, e(i), pr.basis_product(j, k)), m(pr, e(j), pr.basis_product(i, k)))
        return vsub(lhs, rhs)

    def post3(i, j, k):
        lhs = m(pr, e(i), n.basis_product(j, k))
        rhs = vadd(m(n, pr.basis_product(i, j), e(k)), m(n, e(j), pr.basis_product(i, k)))
        return vsub(lhs, rhs)

    return Report("post-lie", scan("post1", d, 2, post1) + scan("post2", d, 3, post2)
                  + scan("post3", d, 3, post3))


def verify_post_assoc(p: PostAssocStructure) -> Report:
    """postAs1-postAs6; postAs7 is checked too and reported under its own name."""
    A, B, s, r = p.A, p.B, p.succ, p.prec
    d = p.dim
    e = A.basis
    m = multiply

    def as1(i, j):
        return vsub(vsub(A.basis_product(i, j), B.basis_product(i, j)),
                    vadd(s.basis_product(i, j), r.basis_product(i, j)))

    def as2(i, j, k):  # (x*y) > z = x > (y > z)
        return vsub(m(s, A.basis_product(i, j), e(k)), m(s, e(i), s.basis_product(j, k)))

    def as3(i, j, k):  # x < (y*z) = (x < y) < z
        return vsub(m(r, e(i), A.basis_product(j, k)), m(r, r.basis_product(i, j), e(k)))

    def as4(i, j, k):  # x > (y∘z) = (x > y)∘z
        return vsub(m(s, e(i), B.basis_product(j, k)), m(B, s.basis_product(i, j), e(k)))

    def as5(i, j, k):  # (x∘y) < z = x∘(y < z)
        return vsub(m(r, B.basis_product(i, j), e(k)), m(B, e(i), r.basis_product(j, k)))

    def as6(i, j, k):  # (x < y)∘z = x∘(y > z)
        return vsub(m(B, r.basis_product(i, j), e(k)), m(B, e(i), s.basis_product(j, k)))

    def as7(i, j, k):  # (x > y) < z = x > (y < z)
        return vsub(m(r, s.basis_product(i, j), e(k)), m(s, e(i), r.basis_product(j, k)))

    violations = scan("postAs1", d, 2, as1)
    for name, fn in (("postAs2", as2), ("postAs3", as3), ("postAs4", as4), ("postAs5", as5),
                     ("postAs6", as6), ("postAs7", as7)):
        violations += scan(name, d, 3, fn)
    return Report("post-assoc", violations)


def axioms_passed(report: Report) -> bool:
    """postAs1-postAs6 hold (ignoring the derived postAs7)."""
    return not [v for v in report.violations if v.check != "postAs7"]


def _require_weight_one(r: RBOperator):
    if r.weight != 1:
        raise WeightError("post-structures are induced by weight-1 operators")


def from_rb_lie(n: Algebra, r: RBOperator) -> PostLieStructure:
    """x·y = {R(x), y}; the bracket of g follows from post1."""
    if n.kind is not Kind.LIE:
        raise KindError("from_rb_lie needs a Lie algebra")
    _require_weight_one(r)
    _require_rb(n, r)
    prod = product_tensor(n.dim, n.field, lambda i, j: multiply(n, r.matrix.col(i), n.basis(j)))
    g = Algebra.from_products(
        n.dim, n.field, Kind.LIE,
        lambda i, j: vadd(vsub(prod.basis_product(i, j), prod.basis_product(j, i)), n.basis_product(i, j)),
        n.labels)
    return PostLieStructure(g, n, prod)


def from_rb_assoc(B: Algebra, r: RBOperator) -> PostAssocStructure:
    """x > y = R(x)∘y, x < y = x∘R(y); A is the induced algebra."""
    if B.kind is not Kind.ASSOCIATIVE:
        raise KindError("from_rb_assoc needs an associative algebra")
    _require_weight_one(r)
    _require_rb(B, r)
    succ = product_tensor(B.dim, B.field, lambda i, j: multiply(B, r.matrix.col(i), B.basis(j)))
    prec = product_tensor(B.dim, B.field, lambda i, j: multiply(B, B.basis(i), r.matrix.col(j)))
    A = Algebra.from_products(
        B.dim, B.field, Kind.ASSOCIATIVE,
        lambda i, j: vadd(vadd(succ.basis_product(i, j), prec.basis_product(i, j)), B.basis_product(i, j)),
        B.labels)
    return PostAssocStructure(A, B, succ, prec)


def _require_valid(p: PostAssocStructure):
    report = verify_post_assoc(p)
    if not report.passed:
        raise CheckFailed("not a post-associative structure", report)


def commutator_descent(p: PostAssocStructure) -> PostLieStructure:
    """(A^-, B^-) with x·y = x > y - y < x."""
    _require_valid(p)
    prod = product_tensor(p.dim, p.A.field,
                          lambda i, j: vsub(p.succ.basis_product(i, j), p.prec.basis_product(j, i)))
    return PostLieStructure(commutator_algebra(p.A), commutator_algebra(p.B), prod)


def derivation_map(p: PostAssocStructure, x) -> Matrix:
    """D_x(a) = x > a - a < x."""
    cols = [vsub(multiply(p.succ, x, p.B.basis(j)), multiply(p.prec, p.B.basis(j), x)) for j in range(p.dim)]
    return Matrix.from_columns(cols, p.A.field, p.dim)


def derivation_map_check(p: PostAssocStructure, x) -> bool:
    """D_x is a derivation of the commutator Lie algebra B^-."""
    _require_valid(p)
    D = derivation_map(p, p.A.field.vector(x))
    nb = commutator_algebra(p.B)
    for i in range(p.dim):
        for j in range(p.dim):
            lhs = D.apply(nb.basis_product(i, j))
            rhs = vadd(multiply(nb, D.col(i), nb.basis(j)), multiply(nb, nb.basis(i), D.col(j)))
            if lhs != rhs:
                return False
    return True


def find_unit(B: Algebra) -> tuple | None:
    """The two-sided unit of B, if any, by solving u∘b = b∘u = b linearly."""
    d = B.dim
    rows, rhs = [], []
    for i in range(d):
        left = [multiply(B, B.basis(k), B.basis(i)) for k in range(d)]   # u∘b_i, column k
        right = [multiply(B, B.basis(i), B.basis(k)) for k in range(d)]  # b_i∘u
        for cols in (left, right):
            for r in range(d):
                rows.append([cols[k][r] for k in range(d)])
                rhs.append(B.field.one if r == i else B.field.zero)
    if not rows:
        return ()
    return solve(Matrix.from_rows(rows, B.field, cols=d), rhs)


def extract_rb(p: PostAssocStructure) -> RBOperator:
    """R(x) = x > 1_B, certified by rebuilding > and < and checking the RB identity.

    Raises :class:`NotRBDerived` with the mismatch when the structure does not
    come from an operator this way.
    """
    _require_valid(p)
    unit = find_unit(p.B)
    if unit is None:
        raise UnsupportedField("B has no unit; extraction needs a unital B")
    R = Matrix.from_columns([multiply(p.succ, p.B.basis(i), unit) for i in range(p.dim)], p.B.field, p.dim)
    op = RBOperator(R, 1)
    B = p.B
    violations = scan("succ", p.dim, 2,
                      lambda i, j: vsub(p.succ.basis_product(i, j), multiply(B, R.col(i), B.basis(j))))
    violations += scan("prec", p.dim, 2,
                       lambda i, j: vsub(p.prec.basis_product(i, j), multiply(B, B.basis(i), R.col(j))))
    report = Report("extract-rb", violations).merge(verify_rb(B, op))
    if not report.passed:
        raise NotRBDerived("structure is not induced by R(x) = x > 1", report)
    return op


class MatrixCase(str, enum.Enum):
    ZERO = "ZeroBranch"
    NEGATION = "NegationBranch"
    OTHER = "Other"


def classify_matrix_case(p: PostAssocStructure) -> MatrixCase:
    """Which of the two trivial branches (if any) a structure falls into."""
    _require_valid(p)
    if not p.succ.sc and not p.prec.sc and p.A.sc == p.B.sc:
        return MatrixCase.ZERO
    neg = tuple((i, j, k, -c) for i, j, k, c in p.B.sc)
    if p.A.sc == neg and p.succ.sc == neg and p.prec.sc == neg:
        return MatrixCase.NEGATION
    return MatrixCase.OTHER


def induced_matches_post1(n: Algebra, r: RBOperator) -> bool:
    """The g bracket of from_rb_lie equals the RB-induced bracket."""
    return from_rb_lie(n, r).g == induced_algebra(n, r)


__all__ = [
    "MatrixCase", "PostAssocStructure", "PostLieStructure", "axioms_passed", "classify_matrix_case",
    "commutator_descent", "derivation_map", "derivation_map_check", "extract_rb", "find_unit",
    "from_rb_assoc", "from_rb_lie", "induced_matches_post1", "product_tensor", "verify_post_assoc",
    "verify_post_lie",
]
