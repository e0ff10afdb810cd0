import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbalg import QQ, PrimeField
from rbalg.algebra import Algebra, Kind, is_semisimple, killing_form
from rbalg.catalog import build
from rbalg.errors import BudgetExceeded, NotSubalgebra, RBVerificationError, UnsupportedField, WeightError
from rbalg.linalg import Matrix, char_poly
from rbalg.rota_baxter import (
    RBOperator, check_rb_homomorphisms, from_splitting, image_decomposition, induced_algebra, kernel_chain,
    lift_to_rationals, search_rb_exhaustive, spectrum_check, tower, trivial_operators, verify_rb,
)

from conftest import span

CATALOG = ["sl:2", "sl:3", "gl:2", "so:4", "sp:4", "Mn:2", "ut:3", "sut:3", "diag:3", "oct",
           "sl-semidirect:2", "g2"]


@pytest.mark.parametrize("name", CATALOG)
@pytest.mark.parametrize("w", [1, 2, -1])
def test_trivial_operators_pass_and_plus_identity_fails(name, w):
    a = build(name, QQ)
    for r in trivial_operators(a, w):
        assert verify_rb(a, r).passed
    plus = RBOperator.scalar(a.dim, QQ, w, w)
    assert verify_rb(a, plus).passed == (not a.sc)


def test_sl2_splitting_matrix(sl2_split):
    assert sl2_split.matrix == Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, -1]], QQ)


def test_splitting_passes(sl2, sl2_split, m2, m2_split):
    assert verify_rb(sl2, sl2_split).passed
    assert verify_rb(m2, m2_split).passed


def test_perturbed_operator_fails_with_witness(sl2, sl2_split):
    entries = list(sl2_split.matrix.entries)
    entries[0] = QQ(1)
    rep = verify_rb(sl2, RBOperator(Matrix(3, 3, QQ, tuple(entries)), 1))
    assert not rep.passed
    v = rep.violations[0]
    assert v.check == "rb" and len(v.indices) == 2


def test_splitting_rejects_non_subalgebra(sl2):
    with pytest.raises(NotSubalgebra):
        from_splitting(sl2, span(sl2, [0, 2]), span(sl2, [1]))


def test_induced_sl2_bracket(sl2, sl2_split):
    g = induced_algebra(sl2, sl2_split)
    # only [h, e] = 2e survives (basis e, h, f)
    assert g.sc == ((0, 1, 0, -2), (1, 0, 0, 2))
    assert not is_semisimple(g)


def test_induced_by_minus_identity_is_negated(sl2):
    _, neg = trivial_operators(sl2, 1)
    g = induced_algebra(sl2, neg)
    assert killing_form(g).gram == killing_form(sl2).gram
    assert g.sc == tuple((i, j, k, -c) for i, j, k, c in sl2.sc)


def test_homomorphisms(sl2, sl2_split, m2, m2_split):
    assert check_rb_homomorphisms(sl2, sl2_split).passed
    assert check_rb_homomorphisms(m2, m2_split).passed


def test_non_rb_is_rejected(sl2):
    r = RBOperator(Matrix.identity(3, QQ), 1)
    with pytest.raises(RBVerificationError):
        induced_algebra(sl2, r)


def test_image_decomposition(m2, m2_split):
    d = image_decomposition(m2, m2_split)
    assert d.sum.is_full()
    with pytest.raises(WeightError):
        image_decomposition(m2, RBOperator.zero(4, QQ, 2))


@pytest.mark.parametrize("which", ["sl2", "m2", "zero"])
def test_tower_and_kernel_chain(which, sl2, sl2_split, m2, m2_split):
    a, r = {"sl2": (sl2, sl2_split), "m2": (m2, m2_split), "zero": (m2, RBOperator.zero(4, QQ, 1))}[which]
    t = tower(a, r, 4)
    assert t.steps == 4 and len(t.homomorphisms) == 4
    for level in t.levels:
        assert level.kind is a.kind
    for i in range(1, 5):
        assert kernel_chain(t, i).passed


def test_sl2_tower_stabilises(sl2, sl2_split):
    t = tower(sl2, sl2_split, 3)
    assert t.levels[1] == t.levels[2] == t.levels[3]


def test_zero_operator_tower_scales(m2):
    t = tower(m2, RBOperator.zero(4, QQ, 1), 2)
    assert t.levels[1] == m2


def _rb_bruteforce_diag(p, n, w):
    """All n x n matrices over F_p that are RB of weight w on F_p^n with componentwise product."""
    out = []
    for entries in product(range(p), repeat=n * n):
        R = [entries[r * n:(r + 1) * n] for r in range(n)]
        col = lambda i: [R[r][i] for r in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                ri, rj = col(i), col(j)
                lhs = [ri[k] * rj[k] % p for k in range(n)]
                inner = [(ri[k] * (k == j) + (k == i) * rj[k] + w * (i == j == k)) % p for k in range(n)]
                rhs = [sum(R[k][m] * inner[m] for m in range(n)) % p for k in range(n)]
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(entries))
    return out


@pytest.mark.parametrize("p,n", [(5, 2), (3, 2), (2, 2), (3, 1), (7, 1)])
def test_search_matches_bruteforce(p, n):
    F = PrimeField(p)
    found = search_rb_exhaustive(build(f"diag:{n}", F), 1)
    assert [tuple(int(x) for x in r.matrix.entries) for r in found] == _rb_bruteforce_diag(p, n, 1)


def test_f5_diag2_count_is_frozen():
    found = search_rb_exhaustive(build("diag:2", PrimeField(5)), 1)
    assert len(found) == 12
    assert all(spectrum_check(r) for r in found)


def test_scalar_idempotent_f3():
    a = Algebra(1, PrimeField(3), Kind.ASSOCIATIVE, ((0, 0, 0, 1),))
    found = search_rb_exhaustive(a, 1)
    assert [int(r.matrix.entries[0]) for r in found] == [0, 2]


def test_search_budget_and_field():
    with pytest.raises(BudgetExceeded):
        search_rb_exhaustive(build("diag:3", PrimeField(5)), 1, budget=1000)
    with pytest.raises(UnsupportedField):
        search_rb_exhaustive(build("diag:2", QQ), 1)


def test_spectrum_check():
    assert spectrum_check(RBOperator(Matrix.from_rows([[0, 0], [0, -1]], QQ), 1))
    assert not spectrum_check(RBOperator(Matrix.from_rows([[1, 0], [0, 0]], QQ), 1))


def test_found_operators_lift():
    F = PrimeField(5)
    for r in search_rb_exhaustive(build("diag:2", F), 1):
        lifted = lift_to_rationals(r, build("diag:2", QQ))
        if lifted is not None:
            assert verify_rb(build("diag:2", QQ), lifted).passed
            assert spectrum_check(lifted)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_random_splittings_of_diag_are_rb_with_spectrum(seed):
    # any partition of the coordinates of Q^n gives a splitting into subalgebras
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    a = build(f"diag:{n}", QQ)
    part = [rng.random() < 0.5 for _ in range(n)]
    s1 = span(a, [i for i in range(n) if part[i]])
    s2 = span(a, [i for i in range(n) if not part[i]])
    r = from_splitting(a, s1, s2)
    assert verify_rb(a, r).passed
    assert spectrum_check(r)
    poly = char_poly(r.matrix)
    assert poly[0] == 1


def test_rb_over_weight_two(sl2):
    # R = -w * pi_2 for a splitting works for any weight after scaling
    r = RBOperator(Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, -2]], QQ), 2)
    assert verify_rb(sl2, r).passed
