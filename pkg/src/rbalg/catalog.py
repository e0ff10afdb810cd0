"""Exact constructors for the algebras used throughout the package.

Matrix models are built from explicit basis matrices; structure constants
come from products (or commutators) re-expressed in that basis, so every
constructor is checked against its law by :class:`Algebra` itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .algebra import Algebra, Kind, left_matrix, restrict, substructure_witness
from .errors import AlgebraError, FieldError, NotSubalgebra, UnsupportedField
from .field import QQ, Field
from .linalg import Matrix, Subspace, _nullspace, coordinates_in_basis


def _unit(n: int, i: int, j: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _mm(x, y):
    m = len(y[0]) if y else 0
    out = []
    for row in x:
        acc = [0] * m
        for t, a in enumerate(row):
            if a:
                for j, b in enumerate(y[t]):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def _sub(x, y):
    return [[a - b for a, b in zip(r, s)] for r, s in zip(x, y)]


def _flat(m):
    return [x for row in m for x in row]


def algebra_from_matrices(mats, field: Field, kind, labels=None) -> Algebra:
    """Structure constants of a matrix algebra (product) or Lie algebra (commutator)."""
    kind = Kind(kind)
    d = len(mats)
    targets = []
    for i in range(d):
        for j in range(d):
            p = _mm(mats[i], mats[j])
            if kind is Kind.LIE:
                p = _sub(p, _mm(mats[j], mats[i]))
            targets.append(_flat(p))
    coords = coordinates_in_basis([_flat(m) for m in mats], targets, field)
    sc = []
    for idx, c in enumerate(coords):
        if c is None:
            i, j = divmod(idx, d)
            raise AlgebraError(f"basis matrices are not closed: product ({i}, {j}) leaves their span")
        i, j = divmod(idx, d)
        sc.extend((i, j, k, x) for k, x in enumerate(c) if x != 0)
    return Algebra(d, field, kind, tuple(sc), labels)


def matrix_units(n: int) -> tuple[list, list[str]]:
    mats = [_unit(n, i, j) for i in range(n) for j in range(n)]
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return mats, labels


def make_matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    """M_n with basis e_ij in row-major order, e_ij e_kl = delta_jk e_il."""
    if n < 1:
        raise ValueError("matrix algebra needs n >= 1")
    sc = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                sc.append((i * n + j, j * n + l, i * n + l, 1))
    return Algebra(n * n, field, Kind.ASSOCIATIVE, tuple(sc), matrix_units(n)[1])


def make_upper_triangular(n: int, field: Field = QQ, strict: bool = False) -> Algebra:
    pairs = [(i, j) for i in range(n) for j in range(n) if (i < j if strict else i <= j)]
    return algebra_from_matrices([_unit(n, i, j) for i, j in pairs], field, Kind.ASSOCIATIVE,
                                 [f"e{i + 1}{j + 1}" for i, j in pairs])


def make_diagonal(n: int, field: Field = QQ) -> Algebra:
    """K^n with orthogonal idempotents; the commutative semisimple algebra."""
    return Algebra(n, field, Kind.ASSOCIATIVE, tuple((i, i, i, 1) for i in range(n)),
                   [f"u{i + 1}" for i in range(n)])


def classical_matrices(family: str, n: int) -> tuple[list, list[str]]:
    """Basis matrices (integer entries) and labels of gl/sl/so/sp.

    For ``sp`` the argument is the matrix size, which must be even.
    """
    if family == "gl":
        if n < 1:
            raise ValueError("gl(n) needs n >= 1")
        return matrix_units(n)
    if family == "sl":
        if n < 2:
            raise ValueError("sl(n) needs n >= 2")
        upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
        lower = [(i, j) for i in range(n) for j in range(i)]
        mats = [_unit(n, i, j) for i, j in upper]
        mats += [_sub(_unit(n, i, i), _unit(n, i + 1, i + 1)) for i in range(n - 1)]
        mats += [_unit(n, i, j) for i, j in lower]
        if n == 2:
            return mats, ["e", "h", "f"]
        labels = [f"e{i + 1}{j + 1}" for i, j in upper] + [f"h{i + 1}" for i in range(n - 1)]
        return mats, labels + [f"e{i + 1}{j + 1}" for i, j in lower]
    if family == "so":
        if n < 2:
            raise ValueError("so(n) needs n >= 2")
        pairs = list(combinations(range(n), 2))
        return ([_sub(_unit(n, i, j), _unit(n, j, i)) for i, j in pairs],
                [f"m{i + 1}{j + 1}" for i, j in pairs])
    if family == "sp":
        if n < 2 or n % 2:
            raise ValueError("sp needs an even matrix size 2m >= 2")
        m = n // 2
        mats, labels = [], []

        def block(a=None, b=None, c=None):
            out = [[0] * n for _ in range(n)]
            for (r, s), v in (a or {}).items():
                out[r][s] += v
                out[m + s][m + r] -= v
            for (r, s), v in (b or {}).items():
                out[r][m + s] += v
            for (r, s), v in (c or {}).items():
                out[m + r][s] += v
            return out

        for i in range(m):
            for j in range(m):
                mats.append(block(a={(i, j): 1}))
                labels.append(f"a{i + 1}{j + 1}")
        for i in range(m):
            for j in range(i, m):
                sym = {(i, j): 1} if i == j else {(i, j): 1, (j, i): 1}
                mats.append(block(b=sym))
                labels.append(f"b{i + 1}{j + 1}")
                mats.append(block(c=sym))
                labels.append(f"c{i + 1}{j + 1}")
        return mats, labels
    raise ValueError(f"unknown classical family {family!r}")


def make_classical_lie(family: str, n: int, field: Field = QQ) -> Algebra:
    mats, labels = classical_matrices(family, n)
    return algebra_from_matrices(mats, field, Kind.LIE, labels)


def so_index(n: int) -> dict[tuple[int, int], int]:
    """Position of the basis element m_ij = E_ij - E_ji (i < j) in so(n)."""
    return {pair: k for k, pair in enumerate(combinations(range(n), 2))}


def skew_to_so(m: Matrix) -> tuple:
    """Coordinates of a skew-symmetric matrix in the standard so(n) basis."""
    n = m.rows
    for i in range(n):
        for j in range(n):
            if m[i, j] != -m[j, i]:
                raise ValueError("matrix is not skew-symmetric")
    return tuple(m[i, j] for i, j in combinations(range(n), 2))


def _cd_conj(x):
    return [x[0]] + [-t for t in x[1:]]


def _cd_mul(x, y):
    # Cayley-Dickson doubling: (a, b)(c, d) = (ac - d*b, da + bc*)
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    left = [p - q for p, q in zip(_cd_mul(a, c), _cd_mul(_cd_conj(d), b))]
    right = [p + q for p, q in zip(_cd_mul(d, a), _cd_mul(b, _cd_conj(c)))]
    return left + right


def make_octonions(field: Field = QQ) -> Algebra:
    """Octonions from quaternions by Cayley-Dickson doubling; e0 is the unit."""
    if field.characteristic == 2:
        raise FieldError("octonions need characteristic != 2")
    basis = [[field.one if k == i else field.zero for k in range(8)] for i in range(8)]
    return Algebra.from_products(8, field, Kind.GENERAL, lambda i, j: _cd_mul(basis[i], basis[j]),
                                 [f"e{i}" for i in range(8)])


def derivations(a: Algebra) -> list[Matrix]:
    """Basis of Der(a): solutions of D(xy) = D(x)y + xD(y) on basis pairs."""
    n = a.dim
    F = a.field
    rows = []
    # unknown D[r][c] sits at r * n + c; D(b_i) is column i
    for i in range(n):
        for j in range(n):
            eqs = [[F.zero] * (n * n) for _ in range(n)]
            for m, c in a.table[i][j]:
                for k in range(n):
                    eqs[k][k * n + m] += c
            for r in range(n):
                for k, c in a.table[r][j]:
                    eqs[k][r * n + i] -= c
                for k, c in a.table[i][r]:
                    eqs[k][r * n + j] -= c
            rows.extend(e for e in eqs if any(x != 0 for x in e))
    sols = _nullspace(rows, n * n, F)
    return [Matrix(n, n, F, s) for s in Subspace.span(sols, n * n, F).vectors()]


@dataclass(frozen=True)
class Embedding:
    source_name: str
    target: Algebra
    image: Subspace

    def __post_init__(self):
        w = substructure_witness(self.target, self.image, "subalgebra")
        if w is not None:
            raise NotSubalgebra(f"image of {self.source_name} is not a subalgebra", witness=w)

    def source(self) -> Algebra:
        return restrict(self.target, self.image)


def _imaginary_block(d: Matrix) -> Matrix:
    return Matrix.from_rows([[d[r, c] for c in range(1, 8)] for r in range(1, 8)], d.field)


def g2_derivation_matrices(field: Field = QQ) -> list[Matrix]:
    """Der(O) acting on O, as 8x8 matrices."""
    return derivations(make_octonions(field))


def make_g2(field: Field = QQ) -> Embedding:
    """G2 = Der(O) restricted to Im O, as a subalgebra of so(7)."""
    if field.characteristic != 0:
        raise UnsupportedField("make_g2 is implemented over Q")
    ders = g2_derivation_matrices(field)
    so7 = make_classical_lie("so", 7, field)
    image = Subspace.span([skew_to_so(_imaginary_block(d)) for d in ders], so7.dim, field)
    return Embedding("g2", so7, image)


def make_spin7(field: Field = QQ) -> Embedding:
    """spin(7) inside so(8), spanned by commutators of left multiplications L_a, a in Im O."""
    if field.characteristic != 0:
        raise UnsupportedField("make_spin7 is implemented over Q")
    octo = make_octonions(field)
    left = [left_matrix(octo, octo.basis(a)) for a in range(1, 8)]
    gens = [skew_to_so(x @ y - y @ x) for x, y in combinations(left, 2)]
    so8 = make_classical_lie("so", 8, field)
    return Embedding("spin7", so8, Subspace.span(gens, so8.dim, field))


def embed_so_on(coords, n: int, field: Field = QQ, name: str | None = None) -> Embedding:
    """so on the given coordinate blocks (each a tuple of indices) inside so(n)."""
    so_n = make_classical_lie("so", n, field)
    idx = so_index(n)
    vecs = []
    for blk in coords:
        for i, j in combinations(sorted(blk), 2):
            vecs.append(so_n.basis(idx[(i, j)]))
    return Embedding(name or "+".join(f"so({len(b)})" for b in coords), so_n,
                     Subspace.span(vecs, so_n.dim, field))


def embed_so_stabilizer(k: int, n: int, torus: bool = False, field: Field = QQ) -> Embedding:
    """so(k) as the upper-left block of so(n); with ``torus`` add so(2) on the last two coordinates."""
    if not 1 <= k <= n:
        raise ValueError(f"so({k}) does not embed as a block of so({n})")
    blocks = [tuple(range(k))]
    if torus:
        if k > n - 2:
            raise ValueError("no room for the so(2) block")
        blocks.append((n - 2, n - 1))
    return embed_so_on(blocks, n, field)


def make_semidirect_sln_vn(n: int, field: Field = QQ) -> Algebra:
    """sl_n ⋉ V(n) realised inside gl(n+1) as [[X, v], [0, 0]]."""
    if n < 2:
        raise ValueError("sl_n ⋉ V(n) needs n >= 2")
    sl_mats, sl_labels = classical_matrices("sl", n)
    mats = [[row + [0] for row in m] + [[0] * (n + 1)] for m in sl_mats]
    mats += [_unit(n + 1, i, n) for i in range(n)]
    return algebra_from_matrices(mats, field, Kind.LIE, sl_labels + [f"v{i + 1}" for i in range(n)])


def _int(s: str) -> int:
    if not re.fullmatch(r"\d+", s):
        raise ValueError(f"expected a positive integer, got {s!r}")
    return int(s)


def build(name: str, field: Field = QQ, features=()) -> Algebra:
    """Instantiate a registered catalog name such as ``sl:2`` or ``g2``."""
    parts = name.split(":")
    head, args = parts[0], parts[1:]
    try:
        if head == "Mn" and len(args) == 1:
            return make_matrix_algebra(_int(args[0]), field)
        if head in ("gl", "sl", "so", "sp") and len(args) == 1:
            return make_classical_lie(head, _int(args[0]), field)
        if head == "oct" and not args:
            return make_octonions(field)
        if head == "g2" and not args:
            return make_g2(field).source()
        if head == "spin7" and not args:
            return make_spin7(field).source()
        if head == "sl-semidirect" and len(args) == 1:
            return make_semidirect_sln_vn(_int(args[0]), field)
        if head == "so-stab" and len(args) == 2:
            return embed_so_stabilizer(_int(args[0]), _int(args[1]), field=field).source()
        if head == "diag" and len(args) == 1:
            return make_diagonal(_int(args[0]), field)
        if head == "ut" and len(args) == 1:
            return make_upper_triangular(_int(args[0]), field)
        if head == "sut" and len(args) == 1:
            return make_upper_triangular(_int(args[0]), field, strict=True)
    except ValueError as exc:
        raise AlgebraError(f"bad catalog name {name!r}: {exc}") from exc
    raise AlgebraError(f"unknown catalog name {name!r}")


LISTED = (
    "Mn:1", "Mn:2", "Mn:3", "gl:2", "gl:3", "sl:2", "sl:3", "sl:4", "so:3", "so:4", "so:5", "so:6",
    "so:7", "so:8", "sp:2", "sp:4", "oct", "g2", "spin7", "sl-semidirect:2", "sl-semidirect:3",
    "so-stab:5:7", "so-stab:6:7", "diag:2", "diag:3", "ut:2", "ut:3", "sut:3", "sut:4",
)


def catalog_list(field: Field = QQ) -> list[tuple[str, int]]:
    """Alphabetical (name, dim) listing of representative catalog instances."""
    return sorted((name, build(name, field).dim) for name in LISTED)


def lie_matrix_dims(family: str, n: int) -> int:
    return {"gl": n * n, "sl": n * n - 1, "so": n * (n - 1) // 2, "sp": (n // 2) * (n + 1)}[family]

