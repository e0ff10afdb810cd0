"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` is the sparse tensor ``sc`` of entries ``(i, j, k, c)``
meaning that the k-th coordinate of ``b_i * b_j`` is ``c``.  Algebras tagged
Lie or associative are checked against their law on construction; kind
``general`` carries arbitrary bilinear products (post-structure products,
octonions, tower steps before re-verification).
"""

from __future__ import annotations

import enum
from dataclasses import InitVar, dataclass
from dataclasses import field as dc_field
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import DimensionMismatch, FieldError, KindError, LawViolation, NotSubalgebra, UnsupportedField
from .field import Field
from .linalg import Matrix, Subspace, _nullspace, char_poly, kernel_image, rank, subspace_sum
from .report import Report, Violation, scan


class Kind(str, enum.Enum):
    ASSOCIATIVE = "assoc"
    LIE = "lie"
    GENERAL = "general"


class Law(str, enum.Enum):
    ASSOCIATIVITY = "associativity"
    LIE = "lie"


class FormKind(str, enum.Enum):
    KILLING = "killing"
    ASSOC_TRACE = "assoc_trace"


@dataclass(frozen=True)
class Algebra:
    dim: int
    field: Field
    kind: Kind
    sc: tuple = ()
    labels: tuple | None = dc_field(default=None, compare=False)
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "kind", Kind(self.kind))
        seen = {}
        for entry in self.sc:
            i, j, k, c = entry
            if not all(isinstance(t, int) and 0 <= t < self.dim for t in (i, j, k)):
                raise DimensionMismatch(f"structure constant index {(i, j, k)} out of range for dim {self.dim}")
            if (i, j, k) in seen:
                raise ValueError(f"duplicate structure constant for {(i, j, k)}")
            seen[(i, j, k)] = self.field(c)
        object.__setattr__(self, "sc", tuple(sorted((i, j, k, c) for (i, j, k), c in seen.items() if c != 0)))
        if self.labels is not None:
            if len(self.labels) != self.dim:
                raise DimensionMismatch("one label per basis vector required")
            object.__setattr__(self, "labels", tuple(self.labels))
        if check and self.kind is not Kind.GENERAL:
            law = Law.LIE if self.kind is Kind.LIE else Law.ASSOCIATIVITY
            report = check_identities(self, law)
            if not report.passed:
                raise LawViolation(f"structure constants violate the {law.value} law", report)

    @classmethod
    def from_products(cls, dim: int, field: Field, kind, prod, labels=None, check: bool = True) -> "Algebra":
        """Build from ``prod(i, j)`` returning the coordinate vector of ``b_i * b_j``."""
        sc = []
        for i in range(dim):
            for j in range(dim):
                for k, c in enumerate(prod(i, j)):
                    if c != 0:
                        sc.append((i, j, k, c))
        return cls(dim, field, kind, tuple(sc), labels, check)

    @classmethod
    def zero_algebra(cls, dim: int, field: Field, kind=Kind.ASSOCIATIVE) -> "Algebra":
        return cls(dim, field, kind, ())

    @cached_property
    def table(self) -> list[list[tuple]]:
        """``table[i][j]`` is the sparse product ``b_i * b_j`` as ``((k, c), ...)``."""
        t = [[[] for _ in range(self.dim)] for _ in range(self.dim)]
        for i, j, k, c in self.sc:
            t[i][j].append((k, c))
        return [[tuple(cell) for cell in row] for row in t]

    def basis(self, i: int) -> tuple:
        return self.field.unit_vector(self.dim, i)

    def basis_product(self, i: int, j: int) -> tuple:
        out = [self.field.zero] * self.dim
        for k, c in self.table[i][j]:
            out[k] = c
        return tuple(out)

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        return multiply(self, u, v)

    def vector(self, xs) -> tuple:
        if len(xs) != self.dim:
            raise DimensionMismatch(f"expected a vector of length {self.dim}")
        return self.field.vector(xs)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def with_kind(self, kind, check: bool = True) -> "Algebra":
        return Algebra(self.dim, self.field, kind, self.sc, self.labels, check)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field}, kind={self.kind.value}, nnz={len(self.sc)})"


def multiply(a: Algebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    if len(u) != a.dim or len(v) != a.dim:
        raise DimensionMismatch(f"vectors must have length {a.dim}")
    out = [a.field.zero] * a.dim
    table = a.table
    vnz = [(j, vj) for j, vj in enumerate(v) if vj != 0]
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = table[i]
        for j, vj in vnz:
            w = ui * vj
            for k, c in row[j]:
                out[k] += w * c
    return tuple(out)


def _smul(a: Algebra, u: dict, v: dict) -> dict:
    """Product of sparse vectors given as {index: coefficient}."""
    out: dict = {}
    table = a.table
    for i, ui in u.items():
        row = table[i]
        for j, vj in v.items():
            w = ui * vj
            for k, c in row[j]:
                out[k] = out.get(k, 0) + w * c
    return {k: c for k, c in out.items() if c != 0}


def _dense(a: Algebra, d: dict) -> tuple:
    out = [a.field.zero] * a.dim
    for k, c in d.items():
        out[k] = a.field(c)
    return tuple(out)


def _sparse_basis(a: Algebra, i: int, j: int) -> dict:
    return dict(a.table[i][j])


def _sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c != 0}


def _add(*ds: dict) -> dict:
    out: dict = {}
    for d in ds:
        for k, c in d.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def check_identities(a: Algebra, law) -> Report:
    """Check a law on basis pairs/triples; sufficient by multilinearity."""
    law = Law(law)
    n = a.dim
    one = a.field.one
    e = [{i: one} for i in range(n)]
    if law is Law.ASSOCIATIVITY:
        def assoc(i, j, k):
            left = _smul(a, _sparse_basis(a, i, j), e[k])
            right = _smul(a, e[i], _sparse_basis(a, j, k))
            return _dense(a, _sub(left, right))
        return Report("associativity", scan("associativity", n, 3, assoc))

    def antisym(i, j):
        if i == j:
            return _dense(a, _sparse_basis(a, i, i))
        return _dense(a, _add(_sparse_basis(a, i, j), _sparse_basis(a, j, i)))

    def jacobi(i, j, k):
        t1 = _smul(a, e[i], _sparse_basis(a, j, k))
        t2 = _smul(a, e[j], _sparse_basis(a, k, i))
        t3 = _smul(a, e[k], _sparse_basis(a, i, j))
        return _dense(a, _add(t1, t2, t3))

    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    violations = scan("antisymmetry", n, 2, antisym, pairs)
    if violations:
        triples = None
    else:
        # with antisymmetry the Jacobiator is alternating: strictly increasing triples suffice
        triples = [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)]
    violations += scan("jacobi", n, 3, jacobi, triples)
    return Report("lie", violations)


def commutator_algebra(a: Algebra) -> Algebra:
    """The Lie algebra A^- with bracket xy - yx."""
    if a.kind is not Kind.ASSOCIATIVE:
        raise KindError("commutator algebra requires an associative algebra")
    return Algebra.from_products(
        a.dim, a.field, Kind.LIE,
        lambda i, j: _dense(a, _sub(_sparse_basis(a, i, j), _sparse_basis(a, j, i))),
        a.labels)


def _check_ambient(a: Algebra, s: Subspace):
    if s.ambient_dim != a.dim:
        raise DimensionMismatch(f"subspace of dimension-{s.ambient_dim} space in a {a.dim}-dim algebra")
    if s.field != a.field:
        raise FieldError("subspace and algebra over different fields")


def substructure_witness(a: Algebra, s: Subspace, mode: str = "subalgebra") -> tuple | None:
    """First product escaping ``s`` as ``(side, p, q)``, or None when closed.

    For ``subalgebra`` the indices refer to the canonical basis of ``s``; for
    ``ideal`` ``p`` indexes the basis of ``s`` and ``q`` the ambient basis.
    """
    _check_ambient(a, s)
    vs = s.vectors()
    if mode == "subalgebra":
        for p, q in product(range(len(vs)), repeat=2):
            if not s.contains(multiply(a, vs[p], vs[q])):
                return ("ss", p, q)
        return None
    if mode != "ideal":
        raise ValueError(f"unknown mode {mode!r}")
    for p, v in enumerate(vs):
        for q in range(a.dim):
            b = a.basis(q)
            if not s.contains(multiply(a, b, v)):
                return ("as", p, q)
            if a.kind is not Kind.LIE and not s.contains(multiply(a, v, b)):
                return ("sa", p, q)
    return None


def substructure_test(a: Algebra, s: Subspace, mode: str = "subalgebra") -> bool:
    return substructure_witness(a, s, mode) is None


def left_matrix(a: Algebra, x: Sequence) -> Matrix:
    """Matrix of y -> x*y (ad x for Lie algebras)."""
    return Matrix.from_columns([multiply(a, x, a.basis(j)) for j in range(a.dim)], a.field, a.dim)


def right_matrix(a: Algebra, x: Sequence) -> Matrix:
    """Matrix of y -> y*x."""
    return Matrix.from_columns([multiply(a, a.basis(j), x) for j in range(a.dim)], a.field, a.dim)


def ad(a: Algebra, x: Sequence) -> Matrix:
    return left_matrix(a, x)


def centralizer(a: Algebra, s: Subspace) -> Subspace:
    """Elements commuting with every vector of ``s`` (bracket zero for Lie)."""
    _check_ambient(a, s)
    rows = []
    for v in s.vectors():
        if a.kind is Kind.LIE:
            cols = [multiply(a, a.basis(i), v) for i in range(a.dim)]
        else:
            cols = [tuple(x - y for x, y in zip(multiply(a, a.basis(i), v), multiply(a, v, a.basis(i))))
                    for i in range(a.dim)]
        rows.extend(zip(*cols))
    return Subspace.span(_nullspace([list(r) for r in rows], a.dim, a.field), a.dim, a.field)


def center(a: Algebra) -> Subspace:
    return centralizer(a, Subspace.full(a.dim, a.field))


def derived_subspace(a: Algebra) -> Subspace:
    """Span of all products b_i b_j."""
    return Subspace.span([a.basis_product(i, j) for i in range(a.dim) for j in range(a.dim)
                          if a.table[i][j]], a.dim, a.field)


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_square:
            raise DimensionMismatch("Gram matrix must be square")

    def __call__(self, u, v):
        return sum((x * y for x, y in zip(u, self.gram.apply(v))), self.gram.field.zero)

    def radical(self) -> Subspace:
        return kernel_image(self.gram)[0]

    def is_nondegenerate(self) -> bool:
        return rank(self.gram) == self.gram.rows


def _left_sparse(a: Algebra, i: int) -> dict:
    """Left multiplication by b_i as {(row, col): value}."""
    out = {}
    for l in range(a.dim):
        for k, c in a.table[i][l]:
            out[(k, l)] = c
    return out


def bilinear_form(a: Algebra, kind) -> BilinearForm:
    """Killing form tr(ad x ad y) or the associative trace form tr(L_x L_y)."""
    kind = FormKind(kind)
    if kind is FormKind.KILLING and a.kind is not Kind.LIE:
        raise KindError("Killing form requires a Lie algebra")
    if kind is FormKind.ASSOC_TRACE and a.kind is not Kind.ASSOCIATIVE:
        raise KindError("associative trace form requires an associative algebra")
    mats = [_left_sparse(a, i) for i in range(a.dim)]
    z = a.field.zero
    gram = [[z] * a.dim for _ in range(a.dim)]
    for i in range(a.dim):
        for j in range(i, a.dim):
            mj = mats[j]
            t = z
            for (k, l), c in mats[i].items():
                d = mj.get((l, k))
                if d is not None:
                    t += c * d
            gram[i][j] = gram[j][i] = t
    return BilinearForm(Matrix.from_rows(gram, a.field, cols=a.dim))


def killing_form(a: Algebra) -> BilinearForm:
    return bilinear_form(a, FormKind.KILLING)


def _require_char0(a: Algebra, what: str):
    if a.field.characteristic != 0:
        raise UnsupportedField(f"{what} is only implemented over Q (got {a.field})")


def radical_assoc(a: Algebra) -> Subspace:
    """Jacobson radical in characteristic zero: kernel of tr(L_x L_y)."""
    if a.kind is not Kind.ASSOCIATIVE:
        raise KindError("radical_assoc requires an associative algebra")
    _require_char0(a, "the trace-form radical")
    return bilinear_form(a, FormKind.ASSOC_TRACE).radical()


def is_semisimple(a: Algebra) -> bool:
    """Cartan's criterion for Lie algebras, trace-form radical for associative ones."""
    _require_char0(a, "semisimplicity testing")
    if a.kind is Kind.LIE:
        return killing_form(a).is_nondegenerate()
    if a.kind is Kind.ASSOCIATIVE:
        return radical_assoc(a).is_zero()
    raise KindError("semisimplicity is defined here for Lie and associative algebras only")


def power_chain(a: Algebra) -> list[Subspace]:
    """A = A^1 ⊇ A^2 ⊇ ... until the chain stabilises."""
    if a.kind is not Kind.ASSOCIATIVE:
        raise KindError("power chain requires an associative algebra")
    chain = [Subspace.full(a.dim, a.field)]
    while True:
        prev = chain[-1]
        if prev.is_zero():
            return chain
        nxt = Subspace.span([multiply(a, v, a.basis(j)) for v in prev.vectors() for j in range(a.dim)],
                            a.dim, a.field)
        if nxt == prev:
            return chain
        chain.append(nxt)


def nilpotency_index(a: Algebra) -> int | None:
    """Smallest k with A^k = 0, or None if the algebra is not nilpotent."""
    chain = power_chain(a)
    return len(chain) if chain[-1].is_zero() else None


def is_nilpotent_assoc(a: Algebra) -> bool:
    return nilpotency_index(a) is not None


def is_perfect_lie(a: Algebra) -> bool:
    if a.kind is not Kind.LIE:
        raise KindError("perfectness is checked for Lie algebras")
    return derived_subspace(a).is_full()


def is_abelian(a: Algebra) -> bool:
    return not a.sc


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    if a.field != b.field:
        raise FieldError("direct sum of algebras over different fields")
    if a.kind is not b.kind:
        raise KindError("direct sum of algebras of different kinds")
    sc = list(a.sc) + [(i + a.dim, j + a.dim, k + a.dim, c) for i, j, k, c in b.sc]
    labels = None
    if a.labels or b.labels:
        labels = tuple(a.label(i) for i in range(a.dim)) + tuple(b.label(i) for i in range(b.dim))
    return Algebra(a.dim + b.dim, a.field, a.kind, tuple(sc), labels)


def restrict(a: Algebra, s: Subspace, check: bool = True) -> Algebra:
    """The subalgebra ``s`` in the coordinates of its canonical basis."""
    _check_ambient(a, s)
    vs = s.vectors()
    m = len(vs)
    sc = []
    for p in range(m):
        for q in range(m):
            w = multiply(a, vs[p], vs[q])
            if not s.contains(w):
                raise NotSubalgebra(f"product of basis vectors {p}, {q} leaves the subspace",
                                    witness=(p, q, w))
            for r, c in enumerate(s.coordinates(w)):
                if c != 0:
                    sc.append((p, q, r, c))
    return Algebra(m, a.field, a.kind, tuple(sc), None, check)


def generated_subalgebra(a: Algebra, vectors: Sequence[Sequence]) -> Subspace:
    s = Subspace.span(vectors, a.dim, a.field)
    while True:
        vs = s.vectors()
        t = Subspace.span(vs + [multiply(a, u, v) for u in vs for v in vs], a.dim, a.field)
        if t == s:
            return s
        s = t


def centroid_dim(a: Algebra) -> int:
    """Dimension of the endomorphisms commuting with all left multiplications."""
    if a.dim == 0:
        return 0
    gens: list[int] = []
    span = Subspace.zero(a.dim, a.field)
    for i in range(a.dim):
        if span.contains(a.basis(i)):
            continue
        gens.append(i)
        span = generated_subalgebra(a, [a.basis(g) for g in gens])
        if span.is_full():
            break
    n = a.dim
    rows = []
    for g in gens:
        L = left_matrix(a, a.basis(g)).tolist()
        # (T L - L T)[r][c] = sum_m T[r][m] L[m][c] - L[r][m] T[m][c]
        for r in range(n):
            for c in range(n):
                row = [a.field.zero] * (n * n)
                for m in range(n):
                    if L[m][c] != 0:
                        row[r * n + m] += L[m][c]
                    if L[r][m] != 0:
                        row[m * n + c] -= L[r][m]
                if any(x != 0 for x in row):
                    rows.append(row)
    return len(_nullspace(rows, n * n, a.field))


def is_simple_lie(a: Algebra) -> bool:
    """Semisimple with one-dimensional centroid, i.e. absolutely simple."""
    if a.kind is not Kind.LIE:
        raise KindError("is_simple_lie requires a Lie algebra")
    return a.dim > 0 and is_semisimple(a) and centroid_dim(a) == 1


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    center_dim: int
    derived_dim: int
    semisimple: bool | None
    nilpotent: bool | None
    perfect: bool | None
    gram_char_poly: tuple | None

    def comparable(self) -> tuple:
        """The basis-independent entries; Gram char-polys are reported only."""
        return (self.dim, self.center_dim, self.derived_dim, self.semisimple, self.nilpotent, self.perfect)


def invariant_fingerprint(a: Algebra) -> Fingerprint:
    semisimple = nilpotent = perfect = gram = None
    if a.kind is Kind.LIE:
        perfect = is_perfect_lie(a)
        gram = tuple(char_poly(killing_form(a).gram))
    elif a.kind is Kind.ASSOCIATIVE:
        nilpotent = is_nilpotent_assoc(a)
        gram = tuple(char_poly(bilinear_form(a, FormKind.ASSOC_TRACE).gram))
    if a.kind is not Kind.GENERAL and a.field.characteristic == 0:
        semisimple = is_semisimple(a)
    return Fingerprint(a.dim, center(a).dim, derived_subspace(a).dim, semisimple, nilpotent, perfect, gram)


@dataclass(frozen=True)
class Decomposition:
    """An ambient algebra with two subalgebra subspaces."""

    ambient: Algebra
    s1: Subspace
    s2: Subspace

    def __post_init__(self):
        for name, s in (("s1", self.s1), ("s2", self.s2)):
            w = substructure_witness(self.ambient, s, "subalgebra")
            if w is not None:
                raise NotSubalgebra(f"{name} is not a subalgebra", witness=w)

    @property
    def sum(self) -> Subspace:
        return subspace_sum(self.s1, self.s2)


__all__ = [
    "Algebra", "BilinearForm", "Decomposition", "Fingerprint", "FormKind", "Kind", "Law", "Violation",
    "ad", "bilinear_form", "center", "centralizer", "centroid_dim", "check_identities", "commutator_algebra",
    "derived_subspace", "direct_sum", "generated_subalgebra", "invariant_fingerprint", "is_abelian",
    "is_nilpotent_assoc", "is_perfect_lie", "is_semisimple", "is_simple_lie", "killing_form", "left_matrix",
    "multiply", "nilpotency_index", "power_chain", "radical_assoc", "restrict", "right_matrix",
    "substructure_test", "substructure_witness",
]
