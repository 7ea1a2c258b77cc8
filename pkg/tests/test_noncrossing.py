from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altorder.errors import (
    DegreeAboveCap,
    NotNiceElement,
    ParameterOutOfRange,
    RankJumpMismatch,
    SupportOutsideTarget,
    ZeroDenominator,
)
from altorder.noncrossing import (
    EVEN,
    MIXED,
    ODD,
    PURE_A,
    closed_counts,
    classify_generator,
    compositions,
    enumerate_nc,
    enumerate_onc,
    is_noncrossing,
    is_noncrossing_geometric,
    k_count_bfs,
    k_generalization,
    onc_membership,
    onc_poset,
    rank_jump_brute,
    rank_jump_count,
    rothe_hagen,
    TwoEvenCycleTarget,
    xpq_numerology,
)
from altorder.perm import CycleGenerator, Permutation, long_cycle, parse_permutation
from altorder.poset import is_below, three_cycle_context
from altorder.verify import kreweras_closure, od_equals_p, order_equivalence, prop_onc_interval
from strategies import nc_of, perms_of


def P(text, n):
    return parse_permutation(text, n)


def test_membership_examples():
    assert onc_membership(P("(1 4 5)", 7)).member
    w = onc_membership(P("(2 4 5)", 5))
    assert w.is_nc and not w.od_ok and not w.member
    assert w.violating_cycle == (2, 4, 5)
    assert onc_membership(Permutation.identity(6)).member


@given(st.integers(1, 8).flatmap(perms_of))
def test_nc_tests_agree(x):
    assert is_noncrossing(x) == is_noncrossing_geometric(x)


def test_enumeration_counts():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    for n in range(1, 10):
        assert len(enumerate_nc(n)) == catalan[n]
    assert len(enumerate_onc(7)) == 30
    assert onc_poset(4).rank_numbers() == [1, 30, 81, 30, 1]
    assert len(enumerate_onc(4)) == 3
    with pytest.raises(DegreeAboveCap):
        enumerate_onc(17)


def test_even_onc_matches_filter():
    for n in range(2, 11, 2):
        filtered = {x for x in enumerate_nc(n) if onc_membership(x).member}
        assert set(enumerate_onc(n)) == filtered


@pytest.mark.parametrize("N", [5, 7, 9])
def test_onc_is_interval(N):
    assert prop_onc_interval(N)[0]


@pytest.mark.parametrize("N", range(1, 10))
def test_structural(N):
    assert od_equals_p(N)[0]
    assert kreweras_closure(N)[0]
    assert order_equivalence(N)[0]


@given(nc_of(9))
def test_membership_is_below_long_cycle(x):
    c = long_cycle(9)
    below = x.is_even() and is_below(three_cycle_context(9), x, c)
    assert below == onc_membership(x).member


def test_closed_count_examples():
    assert closed_counts(3, "zeta", q=2) == 30
    assert closed_counts(2, "rank", k=1) == 5
    assert closed_counts(2, "moebius") == 4
    assert closed_counts(3, "moebius") == -22
    assert [closed_counts(n, "max_chains") for n in (2, 3, 4)] == [5, 49, 729]
    assert [closed_counts(n, "cardinality_odd") for n in (2, 3, 4)] == [7, 30, 143]
    with pytest.raises(ParameterOutOfRange):
        closed_counts(0, "zeta")


def test_closed_forms_vs_brute_force():
    for n in range(1, 5):
        iv = onc_poset(n)
        assert len(iv) == closed_counts(n, "cardinality_odd")
        assert iv.poset.count_maximal_chains() == closed_counts(n, "max_chains")
        assert iv.poset.count_multichains(3) == closed_counts(n, "interval_count")
        z = closed_counts(n, "zeta")
        for q in range(1, 6):
            assert z(q) == iv.poset.count_multichains(q)
        assert len(enumerate_onc(2 * n)) == comb(3 * n, n) // (2 * n + 1)
    assert onc_poset(2).poset.moebius_number() == 4
    assert onc_poset(3).poset.moebius_number() == -22


def test_rank_jump_examples():
    assert rank_jump_count(2, (1, 1)) == 5
    assert rank_jump_count(2, (2, 0)) == 1
    iv = onc_poset(3)
    assert rank_jump_count(3, (1, 1, 1)) == rank_jump_brute(iv, (1, 1, 1))
    with pytest.raises(RankJumpMismatch):
        rank_jump_count(2, (1, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_jumps_brute(n):
    iv = onc_poset(n)
    for q in range(1, 5):
        for r in compositions(n, q):
            assert rank_jump_count(n, r) == rank_jump_brute(iv, r)


def test_rothe_hagen_examples():
    assert rothe_hagen((7,), 2, 3)[0] == rothe_hagen((7,), 2, 3)[1]
    assert rothe_hagen((5, 5), -1, 2) == (35, 35)
    lhs, rhs = rothe_hagen((2, 3), 2, 3)
    assert lhs == rhs
    with pytest.raises(ZeroDenominator):
        rothe_hagen((1,), -1, 1)


@given(
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    st.integers(-3, 3),
    st.integers(0, 5),
)
def test_rothe_hagen_property(a, b, n):
    try:
        lhs, rhs = rothe_hagen(a, b, n)
    except ZeroDenominator:
        return
    assert lhs == rhs


def test_generator_classes():
    t = TwoEvenCycleTarget(2, 2)
    a = lambda *e: CycleGenerator(e, t.degree)
    assert classify_generator(t, a(2, 3, 4)).kind == PURE_A
    g = classify_generator(t, a(1, 2, 6))
    assert (g.kind, g.parity) == (MIXED, ODD)
    g = classify_generator(t, a(2, 1, 6))
    assert (g.kind, g.parity) == (MIXED, EVEN)
    with pytest.raises(SupportOutsideTarget):
        classify_generator(TwoEvenCycleTarget(1, 1), CycleGenerator((1, 2, 5), 5))


def test_xpq_rows():
    r = xpq_numerology(1, 1)
    assert (r.m, r.t, r.mu, r.r, r.max_chains, r.pure_even, r.pure_odd) == (8, 10, 7, [1, 8, 1], 8, 1, 1)
    r = xpq_numerology(1, 2)
    assert (r.pure_even, r.m, r.t) == (5, 48, 58)
    r = xpq_numerology(2, 2)
    assert (r.m, r.t, r.mu, r.r) == (336, 386, 863, [1, 72, 240, 72, 1])
    for p, q in ((1, 1), (1, 2), (1, 3), (2, 2)):
        r = xpq_numerology(p, q)
        assert r.max_chains == r.max_chains_formula
        assert r.pure_even == r.pure_odd == r.pure_formula
        assert r.kreweras_swaps_purity


def test_k_cycles():
    assert k_generalization(1, 3, "count_below_long_cycle") == 2
    assert k_generalization(2, 4, "count_below_long_cycle") == 9 == k_count_bfs(2, 4)
    for n in range(1, 5):
        for q in range(1, 6):
            assert k_generalization(n, 3, "zeta", q=q) == closed_counts(n, "zeta", q=q)
    assert k_generalization(2, 4, "nice_length", x=long_cycle(7)) == 2
    with pytest.raises(NotNiceElement):
        k_generalization(1, 4, "nice_length", x=P("(1 2 3)", 4))
    with pytest.raises(ParameterOutOfRange):
        k_generalization(1, 2, "count_below_long_cycle")
