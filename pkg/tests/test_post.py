import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbalg import QQ, PrimeField
from rbalg.algebra import Algebra, Kind, commutator_algebra, is_semisimple, radical_assoc
from rbalg.catalog import build
from rbalg.errors import CheckFailed, KindError, UnsupportedField, WeightError
from rbalg.linalg import Matrix
from rbalg.post import (
    MatrixCase, PostAssocStructure, PostLieStructure, axioms_passed, classify_matrix_case, commutator_descent,
    derivation_map_check, extract_rb, find_unit, from_rb_assoc, from_rb_lie, induced_matches_post1,
    product_tensor, verify_post_assoc, verify_post_lie,
)
from rbalg.rota_baxter import (
    RBOperator, induced_algebra, lift_to_rationals, search_rb_exhaustive, trivial_operators,
)


def zero_product(a):
    return product_tensor(a.dim, a.field, lambda i, j: a.field.zeros(a.dim))


def zero_assoc(b):
    z = zero_product(b)
    return PostAssocStructure(b, b, z, z)


def test_trivial_post_lie(sl2):
    assert verify_post_lie(PostLieStructure(sl2, sl2, zero_product(sl2))).passed


def test_post1_violation(sl2, sl2_split):
    g = induced_algebra(sl2, sl2_split)
    rep = verify_post_lie(PostLieStructure(g, sl2, zero_product(sl2)))
    assert "post1" in rep.failed_checks()


def test_from_rb_lie(sl2, sl2_split):
    p = from_rb_lie(sl2, sl2_split)
    assert verify_post_lie(p).passed
    assert p.g == induced_algebra(sl2, sl2_split)
    assert induced_matches_post1(sl2, sl2_split)


def test_from_rb_lie_trivial(sl2):
    zero, neg = trivial_operators(sl2, 1)
    p0 = from_rb_lie(sl2, zero)
    assert not p0.prod.sc and p0.g == sl2
    p1 = from_rb_lie(sl2, neg)
    negated = tuple((i, j, k, -c) for i, j, k, c in sl2.sc)
    assert p1.prod.sc == negated and p1.g.sc == negated


def test_weight_must_be_one(sl2):
    with pytest.raises(WeightError):
        from_rb_lie(sl2, RBOperator.zero(3, QQ, 2))


def test_from_rb_assoc_m2(m2, m2_split):
    p = from_rb_assoc(m2, m2_split)
    rep = verify_post_assoc(p)
    assert rep.passed and not rep.by_check("postAs7")
    assert p.A == induced_algebra(m2, m2_split)
    assert not is_semisimple(p.A) and radical_assoc(p.A).dim > 0
    assert classify_matrix_case(p) is MatrixCase.OTHER


def test_swapped_products_fail(m2, m2_split):
    p = from_rb_assoc(m2, m2_split)
    rep = verify_post_assoc(PostAssocStructure(p.A, p.B, p.prec, p.succ))
    assert not axioms_passed(rep)
    assert set(rep.failed_checks()) & {"postAs2", "postAs3", "postAs4", "postAs5", "postAs6"}


def test_trivial_branches(m2):
    zero, neg = trivial_operators(m2, 1)
    p0, p1 = from_rb_assoc(m2, zero), from_rb_assoc(m2, neg)
    assert classify_matrix_case(p0) is MatrixCase.ZERO
    assert classify_matrix_case(p1) is MatrixCase.NEGATION
    assert classify_matrix_case(zero_assoc(m2)) is MatrixCase.ZERO
    assert extract_rb(p0).matrix == zero.matrix
    assert extract_rb(p1).matrix == neg.matrix


def test_extract_round_trip(m2, m2_split):
    assert extract_rb(from_rb_assoc(m2, m2_split)).matrix == m2_split.matrix


def test_descent_square_commutes(m2, m2_split):
    d = commutator_descent(from_rb_assoc(m2, m2_split))
    direct = from_rb_lie(commutator_algebra(m2), m2_split)
    assert verify_post_lie(d).passed
    assert (d.g, d.n, d.prod) == (direct.g, direct.n, direct.prod)


def test_descent_of_negation(m2):
    _, neg = trivial_operators(m2, 1)
    d = commutator_descent(from_rb_assoc(m2, neg))
    assert d.prod.sc == tuple((i, j, k, -c) for i, j, k, c in commutator_algebra(m2).sc)


def test_derivation_maps(m2, m2_split):
    p = from_rb_assoc(m2, m2_split)
    assert all(derivation_map_check(p, m2.basis(i)) for i in range(4))
    assert derivation_map_check(zero_assoc(m2), m2.basis(1))


def test_find_unit():
    assert find_unit(build("Mn:2", QQ)) == (1, 0, 0, 1)
    assert find_unit(build("sut:3", QQ)) is None
    assert find_unit(build("diag:2", QQ)) == (1, 1)


def test_extract_needs_unit():
    b = build("sut:3", QQ)
    with pytest.raises(UnsupportedField):
        extract_rb(zero_assoc(b))


def test_extract_rejects_invalid_structure():
    # succ = x∘y, prec = 0, A = 2B satisfies postAs1 but not postAs2
    b = build("diag:2", QQ)
    succ = product_tensor(2, QQ, lambda i, j: b.basis_product(i, j))
    A = Algebra(2, QQ, Kind.ASSOCIATIVE, tuple((i, j, k, 2 * c) for i, j, k, c in b.sc))
    p = PostAssocStructure(A, b, succ, zero_product(b))
    rep = verify_post_assoc(p)
    assert not rep.by_check("postAs1") and rep.by_check("postAs2")
    with pytest.raises(CheckFailed):
        extract_rb(p)


def test_unital_structures_are_always_rb_derived():
    # on unital B, postAs4-postAs6 force x > y = (x > 1)∘y, so extraction never reports a mismatch
    b = build("ut:2", QQ)
    for r in search_rb_exhaustive(build("ut:2", PrimeField(3)), 1):
        lifted = lift_to_rationals(r, b)
        if lifted is not None:
            assert extract_rb(from_rb_assoc(b, lifted)).matrix == lifted.matrix


def test_invalid_structure_is_rejected(m2, m2_split):
    p = from_rb_assoc(m2, m2_split)
    bad = PostAssocStructure(p.A, p.B, p.prec, p.succ)
    with pytest.raises(CheckFailed):
        commutator_descent(bad)


F5_OPERATORS = search_rb_exhaustive(build("diag:2", PrimeField(5)), 1)


@given(st.sampled_from(F5_OPERATORS))
@settings(max_examples=12, deadline=None)
def test_searched_operators_round_trip(r):
    b = build("diag:2", r.field)
    p = from_rb_assoc(b, r)
    rep = verify_post_assoc(p)
    assert rep.passed
    assert extract_rb(p).matrix == r.matrix
    assert all(derivation_map_check(p, b.basis(i)) for i in range(2))


@given(st.sampled_from(F5_OPERATORS), st.integers(0, 3), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_postAs7_follows_from_the_other_axioms(r, pos, delta):
    # perturb one coefficient of succ; whenever axioms 1-6 still hold, so does postAs7
    b = build("diag:2", r.field)
    p = from_rb_assoc(b, r)
    i, j = divmod(pos, 2)

    def perturbed(a, c):
        v = list(p.succ.basis_product(a, c))
        if (a, c) == (i, j):
            v[i] += delta
        return v

    succ = product_tensor(2, b.field, perturbed)
    q = PostAssocStructure(p.A, p.B, succ, p.prec)
    rep = verify_post_assoc(q)
    if axioms_passed(rep):
        assert not rep.by_check("postAs7")


@pytest.mark.parametrize("name", ["Mn:2", "diag:2", "ut:2"])
def test_induced_post_lie_from_commutators(name):
    b = build(name, QQ)
    for r in trivial_operators(b, 1):
        assert verify_post_lie(from_rb_lie(commutator_algebra(b), r)).passed


def test_from_rb_lie_needs_lie_algebra(m2):
    with pytest.raises(KindError):
        from_rb_lie(m2, RBOperator(Matrix.zeros(4, 4, QQ), 1))
