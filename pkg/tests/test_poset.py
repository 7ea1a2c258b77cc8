from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altorder.errors import InterpolationInconsistent, NotComparable, NotInGeneratedGroup
from altorder.perm import Permutation, compose, conjugate, enumerate_alternating, inverse, long_cycle, parse_permutation
from altorder.polynomial import ExactPolynomial, format_coeffs, interpolate_checked, lagrange_interpolate
from altorder.poset import (
    FinitePoset,
    GeneratorContext,
    anti_automorphism,
    bfs_lengths,
    count_maximal_chains,
    count_multichains,
    interval,
    is_below,
    kreweras,
    lower_cover_elements,
    lower_covers,
    moebius,
    three_cycle_context,
    zeta_and_moebius,
    zeta_polynomial,
)
from strategies import even_perms_of, perms_of

C3 = three_cycle_context


def P(text, n):
    return parse_permutation(text, n)


def test_length_examples():
    assert C3(5).length(P("e", 5)) == 0
    assert C3(4).length(P("(1 2)(3 4)", 4)) == 2
    assert GeneratorContext(7, 4).length(long_cycle(7)) == 2
    with pytest.raises(NotInGeneratedGroup):
        C3(4).length(P("(1 2)", 4))


def test_is_below_examples():
    x, c = P("(2 4 5)", 5), long_cycle(5)
    assert is_below(GeneratorContext(5, "transpositions"), x, c)
    assert not is_below(C3(5), x, c)
    assert is_below(C3(5), P("(1 2 3)", 5), c)


def test_lower_covers_examples():
    assert [str(x) for x in lower_cover_elements(C3(3), long_cycle(3))] == ["e"]
    assert lower_covers(C3(3), Permutation.identity(3)) == []
    rank1 = {str(x) for x in lower_cover_elements(C3(5), long_cycle(5))}
    assert rank1 == {"(1 2 3)", "(2 3 4)", "(3 4 5)", "(1 4 5)", "(1 2 5)"}


def test_lower_covers_drop_length_by_one():
    ctx = C3(7)
    for y in list(enumerate_alternating(7))[::37]:
        for x, a in lower_covers(ctx, y):
            assert compose(x, a.perm) == y
            assert ctx.length(x) == ctx.length(y) - 1


def test_interval_examples():
    ctx = C3(7)
    iv = interval(ctx, Permutation.identity(7), long_cycle(7))
    assert len(iv) == 30 and iv.rank_numbers() == [1, 14, 14, 1]
    assert count_maximal_chains(iv) == 49
    assert len(interval(C3(8), Permutation.identity(8), P("(1 2)(3 4)(5 6)(7 8)", 8))) == 296
    x = P("(1 2 3)", 5)
    assert len(interval(C3(5), x, x)) == 1
    with pytest.raises(NotComparable):
        interval(C3(5), P("(2 4 5)", 5), long_cycle(5))


def test_counts_small():
    e5 = Permutation.identity(5)
    iv5 = interval(C3(5), e5, long_cycle(5))
    assert count_maximal_chains(iv5) == 5
    assert count_multichains(iv5, 2) == 7
    # brute-force count of pairs x <= y in ONC_5
    pairs = sum(iv5.poset.leq(i, j) for i in range(7) for j in range(7))
    assert count_multichains(iv5, 3) == pairs == 18
    assert moebius(iv5) == 4
    iv3 = interval(C3(3), Permutation.identity(3), long_cycle(3))
    assert count_multichains(iv3, 3) == 3
    z, mu = zeta_and_moebius(iv3)
    assert z.coeffs == (0, 1) and mu == -1
    iv4 = interval(C3(4), Permutation.identity(4), P("(1 2)(3 4)", 4))
    assert count_maximal_chains(iv4) == 8
    assert zeta_polynomial(interval(C3(7), Permutation.identity(7), long_cycle(7)))(2) == 30


def test_kreweras_examples():
    c = long_cycle(5)
    assert kreweras(c, Permutation.identity(5)) == c
    assert kreweras(c, c).is_identity()
    assert kreweras(P("(1 2 3)", 3), P("(1 2)", 3)) == P("(2 3)", 3)
    x = P("(1 14 15)(3 4 7)(8 9 10 11 12)", 17)
    assert kreweras(long_cycle(17), x) == P("(1 2 7 12 13)(4 5 6)(15 16 17)", 17)


def test_closed_length_matches_bfs():
    for n in range(3, 8):
        table = bfs_lengths(n, 3)
        ctx = C3(n)
        assert len(table) == len(list(enumerate_alternating(n)))
        for key, d in table.items():
            assert ctx.length(Permutation._raw(key)) == d
    for n in range(2, 7):
        table = bfs_lengths(n, 2)
        for key, d in table.items():
            x = Permutation._raw(key)
            assert x.n - x.cyc() == d


def _check_anti(iv):
    y, z = iv.bottom, iv.top
    images = [iv.index(anti_automorphism(y, z, x)) for x in iv.elements]
    assert sorted(images) == list(range(len(iv)))
    for a, b in iv.covers:
        assert (images[b], images[a]) in set(iv.covers)


@given(st.integers(3, 7).flatmap(even_perms_of))
def test_anti_automorphism(x):
    _check_anti(interval(C3(x.n), Permutation.identity(x.n), x))


@given(st.integers(4, 7).flatmap(lambda n: st.tuples(even_perms_of(n), even_perms_of(n))))
def test_shift_isomorphism(t):
    y, z = t
    ctx = C3(y.n)
    if not is_below(ctx, y, z):
        y = Permutation.identity(y.n)
    iv = interval(ctx, y, z)
    _check_anti(iv)
    base = interval(ctx, Permutation.identity(y.n), compose(inverse(y), z))
    # x -> y^-1 x relabels [y, z] onto [e, y^-1 z]
    mapped = sorted((base.index(compose(inverse(y), iv.elements[a])), base.index(compose(inverse(y), iv.elements[b]))) for a, b in iv.covers)
    assert mapped == sorted(base.covers)
    assert iv.ranks == [base.ranks[base.index(compose(inverse(y), x))] for x in iv.elements]


@given(st.integers(4, 7).flatmap(lambda n: st.tuples(even_perms_of(n), perms_of(n))))
def test_conjugation_invariance(t):
    x, w = t
    ctx = C3(x.n)
    e = Permutation.identity(x.n)
    a = interval(ctx, e, x)
    b = interval(ctx, e, conjugate(x, w))
    assert len(a) == len(b) and a.rank_numbers() == b.rank_numbers()
    mapped = sorted((b.index(conjugate(a.elements[i], w)), b.index(conjugate(a.elements[j], w))) for i, j in a.covers)
    assert mapped == sorted(b.covers)


@given(st.integers(3, 8).flatmap(even_perms_of))
def test_zeta_moebius_consistency(x):
    iv = interval(C3(x.n), Permutation.identity(x.n), x)
    z, mu = zeta_and_moebius(iv)
    assert z(-1) == mu
    assert z(2) == len(iv)
    lead = z.leading() if iv.rank else 1
    assert lead * factorial(iv.rank) == count_maximal_chains(iv)
    for a, b in iv.covers:
        assert iv.ranks[b] == iv.ranks[a] + 1


def test_finite_poset_basics():
    chain = FinitePoset(3, [(0, 1), (1, 2)])
    assert chain.moebius(0, 2) == 0 and chain.moebius(0, 1) == -1
    boolean = FinitePoset.from_order(4, lambda i, j: (i & j) == i)
    assert boolean.moebius_number() == 1
    assert boolean.count_maximal_chains() == 2
    assert boolean.count_multichains(3) == 9
    with pytest.raises(ValueError):
        FinitePoset(2, [(0, 1), (1, 0)]).topological_order()


def test_polynomial_tools():
    p = lagrange_interpolate([(0, 1), (1, 3), (2, 7)])
    assert p.coeffs == (1, 1, 1)
    assert format_coeffs(ExactPolynomial([1, 0, -2]).coeffs) == "1;0;-2"
    assert format_coeffs([ExactPolynomial([0, 1]).coeffs[1] / 3]) == "1/3"
    with pytest.raises(InterpolationInconsistent):
        interpolate_checked(lambda m: 2**m, 2)
