"""Named Rota-Baxter instances used by the test-suites and the README examples."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, commutator_algebra
from .catalog import build
from .field import QQ, PrimeField
from .linalg import Subspace
from .rota_baxter import RBOperator, from_splitting, lift_to_rationals, search_rb_exhaustive, trivial_operators


@dataclass(frozen=True)
class RBInstance:
    name: str
    algebra: Algebra
    rb: RBOperator


def _span(a: Algebra, idx) -> Subspace:
    return Subspace.span([a.basis(i) for i in idx], a.dim, a.field)


def sl2_splitting() -> RBInstance:
    """sl2 = span{e, h} + span{f}; R = -projection onto f."""
    a = build("sl:2", QQ)
    return RBInstance("sl:2/split", a, from_splitting(a, _span(a, [0, 1]), _span(a, [2])))


def m2_splitting() -> RBInstance:
    """M2 = upper triangular + span{e21}."""
    a = build("Mn:2", QQ)
    return RBInstance("Mn:2/split", a, from_splitting(a, _span(a, [0, 1, 3]), _span(a, [2])))


def shipped_instances() -> list[RBInstance]:
    """Splittings, the two trivial operators on several algebras, and lifts of F_5 solutions on Q^2."""
    out = [sl2_splitting(), m2_splitting()]
    m2 = out[1]
    out.append(RBInstance("gl:2/split", commutator_algebra(m2.algebra), m2.rb))
    for name in ("sl:2", "sl:3", "so:5", "gl:2", "Mn:2", "ut:2", "diag:2"):
        a = build(name, QQ)
        zero, neg = trivial_operators(a, 1)
        out.append(RBInstance(f"{name}/zero", a, zero))
        out.append(RBInstance(f"{name}/minus-id", a, neg))
    diag = build("diag:2", QQ)
    for k, r in enumerate(search_rb_exhaustive(build("diag:2", PrimeField(5)), 1)):
        lifted = lift_to_rationals(r, diag)
        if lifted is not None:
            out.append(RBInstance(f"diag:2/F5-lift-{k}", diag, lifted))
    return out
