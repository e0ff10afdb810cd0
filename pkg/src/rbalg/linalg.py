"""Exact dense linear algebra over Q and F_p.

Vectors are tuples of field elements.  :class:`Matrix` stores entries
row-major and acts on column vectors, so ``m.col(i)`` is the image of the
i-th basis vector.  :class:`Subspace` keeps a reduced row echelon basis,
which makes subspace equality a plain ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldError
from .field import Field


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    field: Field
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", tuple(self.field(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, field, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field, rows: int | None = None) -> "Matrix":
        if not columns:
            return cls(rows or 0, 0, field, ())
        return cls.from_rows(list(zip(*columns)), field, cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls(rows, cols, field, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        z, o = field.zero, field.one
        return cls(n, n, field, tuple(o if i == j else z for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.field,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def _same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldError(f"matrices over {self.field} and {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix sum")
        return Matrix(self.rows, self.cols, self.field,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.rows, self.cols, self.field, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        z = self.field.zero
        a = self.tolist()
        b = other.tolist()
        out = []
        for i in range(self.rows):
            acc = [z] * other.cols
            for k, aik in enumerate(a[i]):
                if aik == 0:
                    continue
                bk = b[k]
                for j in range(other.cols):
                    if bk[j] != 0:
                        acc[j] += aik * bk[j]
            out.extend(acc)
        return Matrix(self.rows, other.cols, self.field, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``m @ v``."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        z = self.field.zero
        out = [z] * self.rows
        for j, vj in enumerate(v):
            if vj == 0:
                continue
            for i in range(self.rows):
                x = self.entries[i * self.cols + j]
                if x != 0:
                    out[i] += x * vj
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.rows, self.field)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def trace(self):
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), self.field.zero)


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan elimination; returns nonzero rows and pivots."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = 1 / piv[c]
        if piv[c] != 1:
            piv = rows[r] = [x * inv if x != 0 else x for x in piv]
        nz = [j for j in range(c, ncols) if piv[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            row = rows[i]
            for j in nz:
                row[j] = row[j] - f * piv[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form with zero rows dropped.

    The result is the canonical basis of the row space, so ``rref`` of a
    rank-deficient matrix has fewer rows than its input.
    """
    rows, _ = _rref_rows(m.tolist(), m.cols)
    return Matrix.from_rows(rows, m.field, cols=m.cols)


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.tolist(), m.cols)[1])


def _nullspace(rows: list[list], ncols: int, field: Field) -> list[tuple]:
    red, pivots = _rref_rows([list(r) for r in rows], ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            if row[f] != 0:
                v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def nullspace(m: Matrix) -> list[tuple]:
    """A basis of {v : m v = 0}, not canonicalised."""
    return _nullspace(m.tolist(), m.cols, m.field)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` with its canonical RREF basis."""

    ambient_dim: int
    field: Field
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim or self.basis.field != self.field:
            raise DimensionMismatch("basis does not live in the ambient space")
        if rref(self.basis) != self.basis:
            raise ValueError("Subspace basis must be given in canonical RREF; use Subspace.span")

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, field: Field) -> "Subspace":
        rows = [[field(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        red, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, field, Matrix.from_rows(red, field, cols=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls(ambient_dim, field, Matrix(0, ambient_dim, field, ()))

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls(ambient_dim, field, Matrix.identity(ambient_dim, field))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for i in range(self.dim):
            row = self.basis.row(i)
            out.append(next(j for j, x in enumerate(row) if x != 0))
        return tuple(out)

    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.dim)]

    def _reduce(self, v: Sequence) -> list:
        v = list(v)
        for i, pc in enumerate(self.pivots):
            c = v[pc]
            if c != 0:
                row = self.basis.row(i)
                for j in range(pc, self.ambient_dim):
                    if row[j] != 0:
                        v[j] = v[j] - c * row[j]
        return v

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return all(x == 0 for x in self._reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the canonical basis; ``v`` must lie in the span."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def issubset(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(v) for v in self.vectors())

    def annihilator(self) -> "Subspace":
        """{w : w . v = 0 for all v in self} under the standard pairing."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim, self.field)
        return Subspace.span(_nullspace(self.basis.tolist(), self.ambient_dim, self.field),
                             self.ambient_dim, self.field)


def _check_compatible(s: Subspace, t: Subspace):
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {s.ambient_dim} and {t.ambient_dim}")
    if s.field != t.field:
        raise FieldError(f"subspaces over {s.field} and {t.field}")


def kernel_image(m: Matrix) -> tuple[Subspace, Subspace]:
    """Kernel (in field^cols) and column space (in field^rows) of ``m``."""
    kernel = Subspace.span(nullspace(m), m.cols, m.field)
    image = Subspace.span(m.columns(), m.rows, m.field)
    return kernel, image


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_compatible(s, t)
    return Subspace.span(s.vectors() + t.vectors(), s.ambient_dim, s.field)


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_compatible(s, t)
    return subspace_sum(s.annihilator(), t.annihilator()).annihilator()


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    aug = [list(m.row(i)) + [m.field(b[i])] for i in range(m.rows)]
    red, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [m.field.zero] * m.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    ident = Matrix.identity(n, m.field)
    aug = [list(m.row(i)) + list(ident.row(i)) for i in range(n)]
    red, pivots = _rref_rows(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix.from_rows([row[n:] for row in red], m.field, cols=n)


def char_poly(m: Matrix) -> list:
    """Monic characteristic polynomial det(tI - m), leading coefficient first.

    Berkowitz's algorithm: division-free, so it is equally valid over F_p.
    """
    if not m.is_square:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    F = m.field
    a = m.tolist()
    poly = [F.one]
    for r in range(m.rows):
        # leading r x r block A_r, column C = a[:r][r], row R = a[r][:r]
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        toeplitz = [F.one, -a[r][r]]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum((x * y for x, y in zip(row, vec)), F.zero))
            vec = [sum((a[i][k] * vec[k] for k in range(r)), F.zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = F.zero
            for j in range(min(i, r) + 1):
                if i - j < len(toeplitz):
                    acc += toeplitz[i - j] * poly[j]
            new.append(acc)
        poly = new
    return poly


def stack(vectors: Sequence[Sequence], field: Field, ncols: int) -> Matrix:
    return Matrix.from_rows([list(v) for v in vectors], field, cols=ncols)


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], field: Field, n: int) -> tuple:
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x != 0:
                out[k] += c * x
    return tuple(out)


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def coordinates_in_basis(basis: Sequence[Sequence], targets: Sequence[Sequence], field: Field) -> list[tuple | None]:
    """Coordinates of each target w.r.t. linearly independent ``basis``.

    Returns None for targets outside the span.  One elimination handles all
    right-hand sides at once.
    """
    m = len(basis)
    if not targets:
        return []
    n = len(targets[0])
    rows = [[field(basis[c][r]) for c in range(m)] + [field(t[r]) for t in targets] for r in range(n)]
    red, pivots = _rref_rows(rows, m + len(targets))
    if pivots[:m] != list(range(m)):
        raise ValueError("basis vectors are linearly dependent")
    out = []
    for t in range(len(targets)):
        col = m + t
        if any(row[col] != 0 for row in red[m:]):
            out.append(None)
        else:
            out.append(tuple(red[i][col] for i in range(m)))
    return out
