from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbalg import QQ, PrimeField
from rbalg.algebra import (
    Algebra, Decomposition, FormKind, Kind, Law, bilinear_form, center, centroid_dim, check_identities,
    commutator_algebra, derived_subspace, direct_sum, generated_subalgebra, invariant_fingerprint, is_abelian,
    is_nilpotent_assoc, is_perfect_lie, is_semisimple, is_simple_lie, killing_form, multiply, nilpotency_index,
    radical_assoc, restrict, substructure_test, substructure_witness,
)
from rbalg.catalog import build, classical_matrices
from rbalg.errors import KindError, LawViolation, NotSubalgebra, UnsupportedField
from rbalg.linalg import Subspace, coordinates_in_basis

from conftest import span


def _trace_product(x, y):
    n = len(x)
    return sum(x[i][k] * y[k][i] for i in range(n) for k in range(n))


# Killing form of a classical matrix algebra is a fixed multiple of tr(XY)
@pytest.mark.parametrize("family,n,factor", [
    ("sl", 2, 4), ("sl", 3, 6), ("so", 5, 3), ("so", 6, 4), ("sp", 4, 6),
])
def test_killing_form_matches_trace_formula(family, n, factor):
    a = build(f"{family}:{n}", QQ)
    mats, _ = classical_matrices(family, n)
    gram = killing_form(a).gram
    for i in range(a.dim):
        for j in range(a.dim):
            assert gram[i, j] == factor * _trace_product(mats[i], mats[j])


def test_sl2_killing_values(sl2):
    k = killing_form(sl2)
    e, h, f = (sl2.basis(i) for i in range(3))
    assert (k(e, f), k(h, h), k(e, e)) == (4, 8, 0)


@pytest.mark.parametrize("name", ["sl:2", "sl:3", "so:3", "so:5", "so:7", "sp:4", "g2", "Mn:2", "Mn:3", "diag:3"])
def test_semisimple_catalog(name):
    assert is_semisimple(build(name, QQ))


@pytest.mark.parametrize("name", ["gl:2", "ut:2", "ut:3", "sut:3", "sl-semidirect:2"])
def test_not_semisimple(name):
    assert not is_semisimple(build(name, QQ))


def test_radical_of_upper_triangular_is_strict_part():
    a = build("ut:3", QQ)
    strict = Subspace.span([a.basis(i) for i, lab in enumerate(a.labels) if lab[1] != lab[2]], a.dim, QQ)
    assert radical_assoc(a) == strict


def test_semisimplicity_needs_char_zero():
    with pytest.raises(UnsupportedField):
        is_semisimple(build("sl:2", PrimeField(5)))


def test_nilpotency_indices():
    assert nilpotency_index(build("sut:3", QQ)) == 3
    assert nilpotency_index(build("sut:4", QQ)) == 4
    assert nilpotency_index(build("Mn:2", QQ)) is None
    assert not is_nilpotent_assoc(build("ut:2", QQ))


def test_gl_center_and_derived():
    gl3 = build("gl:3", QQ)
    assert center(gl3).dim == 1
    assert derived_subspace(gl3).dim == 8
    assert not is_perfect_lie(gl3)
    assert is_perfect_lie(build("sl:3", QQ))


def test_lie_law_violation_is_reported():
    # [b0, b1] = b0 but [b1, b0] = 0
    with pytest.raises(LawViolation) as exc:
        Algebra(2, QQ, Kind.LIE, ((0, 1, 0, 1),))
    assert exc.value.report.failed_checks() == ["antisymmetry"]


def test_jacobi_violation():
    # antisymmetric but [[b0,b1],b2] + cyclic != 0
    sc = ((0, 1, 2, 1), (1, 0, 2, -1), (0, 2, 0, 1), (2, 0, 0, -1))
    rep = check_identities(Algebra(3, QQ, Kind.GENERAL, sc), Law.LIE)
    assert rep.failed_checks() == ["jacobi"]


def test_associativity_violation():
    with pytest.raises(LawViolation):
        Algebra(2, QQ, Kind.ASSOCIATIVE, ((0, 0, 1, 1), (1, 0, 0, 1)))


def test_octonions_are_not_associative():
    rep = check_identities(build("oct", QQ), Law.ASSOCIATIVITY)
    assert not rep.passed


@pytest.mark.parametrize("name", ["Mn:2", "ut:3", "diag:2", "sut:4"])
def test_commutator_algebra_is_lie(name):
    assert check_identities(commutator_algebra(build(name, QQ)), Law.LIE).passed


def test_restrict_and_witness(sl2):
    borel = span(sl2, [0, 1])
    r = restrict(sl2, borel)
    assert r.dim == 2 and not is_semisimple(r)
    bad = span(sl2, [0, 2])
    assert substructure_witness(sl2, bad) is not None
    with pytest.raises(NotSubalgebra):
        restrict(sl2, bad)


def test_ideal_test(sl2):
    gl2 = build("gl:2", QQ)
    assert substructure_test(gl2, derived_subspace(gl2), "ideal")
    assert not substructure_test(sl2, span(sl2, [0, 1]), "ideal")


def test_generated_subalgebra(sl2):
    assert generated_subalgebra(sl2, [sl2.basis(0), sl2.basis(2)]).is_full()


def test_direct_sum_semisimple(sl2):
    s = direct_sum(sl2, sl2)
    assert s.dim == 6 and is_semisimple(s)
    assert not is_simple_lie(s)
    assert is_simple_lie(sl2)
    assert centroid_dim(s) == 2


def test_forms_require_matching_kind(sl2):
    with pytest.raises(KindError):
        bilinear_form(sl2, FormKind.ASSOC_TRACE)
    with pytest.raises(KindError):
        is_semisimple(build("oct", QQ))


def test_fingerprint_basis_independent(sl2):
    # same algebra, basis {e, h + e, f}
    e, h, f = (sl2.basis(i) for i in range(3))
    new = [e, tuple(x + y for x, y in zip(h, e)), f]
    prod = lambda i, j: coordinates_in_basis(new, [multiply(sl2, new[i], new[j])], QQ)[0]
    other = Algebra.from_products(3, QQ, Kind.LIE, prod)
    assert other != sl2
    assert invariant_fingerprint(other).comparable() == invariant_fingerprint(sl2).comparable()


def test_abelian_and_zero():
    z = Algebra.zero_algebra(3, QQ, Kind.LIE)
    assert is_abelian(z) and center(z).dim == 3 and not is_semisimple(z)


def test_decomposition_requires_subalgebras(sl2):
    with pytest.raises(NotSubalgebra):
        Decomposition(sl2, span(sl2, [0, 2]), span(sl2, [1]))


@st.composite
def assoc_structures(draw):
    """Random associative algebras: random subalgebras of M_3 (generated by random matrices)."""
    m3 = build("Mn:3", QQ)
    vecs = draw(st.lists(st.lists(st.integers(-1, 1), min_size=9, max_size=9), min_size=1, max_size=2))
    s = generated_subalgebra(m3, vecs)
    return restrict(m3, s)


@given(assoc_structures())
@settings(max_examples=25, deadline=None)
def test_random_subalgebras_satisfy_their_laws(a):
    assert check_identities(a, Law.ASSOCIATIVITY).passed
    assert check_identities(commutator_algebra(a), Law.LIE).passed
    # nilpotent algebras have everything in the radical
    if is_nilpotent_assoc(a):
        assert radical_assoc(a).is_full()


def test_fraction_structure_constants_are_exact():
    a = Algebra(1, QQ, Kind.ASSOCIATIVE, ((0, 0, 0, Fraction(1, 3)),))
    assert a.basis_product(0, 0) == (Fraction(1, 3),)
