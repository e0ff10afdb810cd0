"""JSON encoding of the package's value types.

Scalars are strings ("3", "-1/2" over Q, "4" over F_p); plain integers are
accepted on input.  ``dumps`` sorts keys so equal values give identical text.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import Algebra, Decomposition, Kind
from .cohomology import Bimodule, Cocycle, Representation
from .errors import AlgebraError, FieldError
from .field import Field, parse_field
from .linalg import Matrix, Subspace
from .post import PostAssocStructure, PostLieStructure
from .rota_baxter import RBOperator


class JSONFormatError(AlgebraError, ValueError):
    pass


def _scalar(field: Field, x) -> Any:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise JSONFormatError(f"scalar must be a string or integer, got {x!r}")
    try:
        return field.parse(x) if isinstance(x, str) else field(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise JSONFormatError(f"bad scalar {x!r}: {exc}") from exc


def _get(obj: dict, key: str):
    if not isinstance(obj, dict):
        raise JSONFormatError(f"expected an object with key {key!r}")
    try:
        return obj[key]
    except KeyError:
        raise JSONFormatError(f"missing key {key!r}") from None


def _field(obj: dict) -> Field:
    text = _get(obj, "field")
    if not isinstance(text, str):
        raise JSONFormatError(f"field must be a string, got {text!r}")
    return parse_field(text)


def _nonneg_int(obj: dict, key: str) -> int:
    v = _get(obj, key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise JSONFormatError(f"{key} must be a nonnegative integer, got {v!r}")
    return v


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "field": str(m.field),
            "entries": [m.field.format(x) for x in m.entries]}


def matrix_from_json(obj: dict, field: Field | None = None) -> Matrix:
    f = _field(obj)
    if field is not None and f != field:
        raise FieldError(f"matrix is over {f}, expected {field}")
    rows, cols, entries = _nonneg_int(obj, "rows"), _nonneg_int(obj, "cols"), _get(obj, "entries")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise JSONFormatError("entries must be a list of rows*cols scalars")
    return Matrix(rows, cols, f, tuple(_scalar(f, x) for x in entries))


def subspace_to_json(s: Subspace) -> dict:
    return matrix_to_json(s.basis)


def subspace_from_json(obj: dict, field: Field | None = None) -> Subspace:
    m = matrix_from_json(obj, field)
    return Subspace.span(m.tolist(), m.cols, m.field)


def _sc_to_json(field: Field, sc) -> list:
    return [[i, j, k, field.format(c)] for i, j, k, c in sc]


def _sc_from_json(field: Field, dim: int, rows) -> tuple:
    if not isinstance(rows, list):
        raise JSONFormatError("structure constants must be a list")
    out = []
    for row in rows:
        if not (isinstance(row, list) and len(row) == 4):
            raise JSONFormatError(f"structure constant entry must be [i, j, k, c], got {row!r}")
        i, j, k, c = row
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j, k)):
            raise JSONFormatError(f"index out of range in {row!r}")
        out.append((i, j, k, _scalar(field, c)))
    return tuple(out)


def algebra_to_json(a: Algebra) -> dict:
    return {"dim": a.dim, "field": str(a.field), "kind": a.kind.value,
            "sc": _sc_to_json(a.field, a.sc), "labels": [a.label(i) for i in range(a.dim)]}


def algebra_from_json(obj: dict, check: bool = True) -> Algebra:
    f = _field(obj)
    dim = _nonneg_int(obj, "dim")
    try:
        kind = Kind(_get(obj, "kind"))
    except ValueError:
        raise JSONFormatError(f"unknown algebra kind {obj.get('kind')!r}") from None
    labels = obj.get("labels")
    return Algebra(dim, f, kind, _sc_from_json(f, dim, obj.get("sc", [])), tuple(labels) if labels else None, check)


def _product_from_json(template: Algebra, rows) -> Algebra:
    return Algebra(template.dim, template.field, Kind.GENERAL, _sc_from_json(template.field, template.dim, rows))


def rb_to_json(r: RBOperator) -> dict:
    return {"weight": r.field.format(r.weight), "matrix": matrix_to_json(r.matrix)}


def rb_from_json(obj: dict, field: Field | None = None) -> RBOperator:
    m = matrix_from_json(_get(obj, "matrix"), field)
    return RBOperator(m, _scalar(m.field, _get(obj, "weight")))


def post_assoc_to_json(p: PostAssocStructure) -> dict:
    f = p.A.field
    return {"A": algebra_to_json(p.A), "B": algebra_to_json(p.B),
            "succ": _sc_to_json(f, p.succ.sc), "prec": _sc_to_json(f, p.prec.sc)}


def post_assoc_from_json(obj: dict) -> PostAssocStructure:
    A, B = algebra_from_json(_get(obj, "A")), algebra_from_json(_get(obj, "B"))
    return PostAssocStructure(A, B, _product_from_json(A, _get(obj, "succ")), _product_from_json(A, _get(obj, "prec")))


def post_lie_to_json(p: PostLieStructure) -> dict:
    return {"g": algebra_to_json(p.g), "n": algebra_to_json(p.n), "prod": _sc_to_json(p.g.field, p.prod.sc)}


def post_lie_from_json(obj: dict) -> PostLieStructure:
    g, n = algebra_from_json(_get(obj, "g")), algebra_from_json(_get(obj, "n"))
    return PostLieStructure(g, n, _product_from_json(g, _get(obj, "prod")))


def decomposition_to_json(d: Decomposition) -> dict:
    return {"ambient": algebra_to_json(d.ambient), "s1": subspace_to_json(d.s1), "s2": subspace_to_json(d.s2)}


def decomposition_from_json(obj: dict) -> Decomposition:
    a = algebra_from_json(_get(obj, "ambient"))
    return Decomposition(a, subspace_from_json(_get(obj, "s1"), a.field), subspace_from_json(_get(obj, "s2"), a.field))


def representation_to_json(r: Representation) -> dict:
    return {"alg": algebra_to_json(r.alg), "mdim": r.mdim, "action": [matrix_to_json(m) for m in r.action]}


def representation_from_json(obj: dict) -> Representation:
    a = algebra_from_json(_get(obj, "alg"))
    return Representation(a, _nonneg_int(obj, "mdim"), tuple(matrix_from_json(m, a.field) for m in _get(obj, "action")))


def bimodule_to_json(b: Bimodule) -> dict:
    return {"alg": algebra_to_json(b.alg), "mdim": b.mdim,
            "left": [matrix_to_json(m) for m in b.left], "right": [matrix_to_json(m) for m in b.right]}


def bimodule_from_json(obj: dict) -> Bimodule:
    a = algebra_from_json(_get(obj, "alg"))
    return Bimodule(a, _nonneg_int(obj, "mdim"), tuple(matrix_from_json(m, a.field) for m in _get(obj, "left")),
                    tuple(matrix_from_json(m, a.field) for m in _get(obj, "right")))


def cocycle_to_json(c: Cocycle) -> dict:
    return matrix_to_json(c.map)


def cocycle_from_json(obj: dict, field: Field | None = None) -> Cocycle:
    return Cocycle(matrix_from_json(obj, field))


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise JSONFormatError(f"{path}: malformed JSON ({exc})") from exc
