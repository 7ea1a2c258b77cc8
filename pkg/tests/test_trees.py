import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altorder.errors import MalformedTree, NotNoncrossing, NotOnc, WrongFlavor
from altorder.noncrossing import enumerate_onc
from altorder.perm import Permutation, compose, inverse, long_cycle, parse_permutation
from altorder.trees import (
    EVEN,
    TERNARY,
    BicoloredPlaneTree,
    PlaneRootedTree,
    count_even_trees,
    enumerate_even_trees,
    enumerate_ternary_trees,
    even_ternary,
    is_even_tree,
    onc_even_tree,
    onc_even_tree_inverse,
    onc_tree_pair,
    onc_tree_pair_inverse,
    phi,
    phi_inverse,
    phi_labels,
    ternary_even,
    tree_edges,
    tree_from_string,
    tree_to_string,
)
from altorder.verify import degree_dictionary, onc_tree_checks, phi_round_trip
from strategies import nc_of

EXAMPLE = parse_permutation("(1 14 15)(3 4 7)(8 9 10 11 12)", 17)


def test_single_edge():
    t = phi(Permutation.identity(1))
    assert t == BicoloredPlaneTree((), ())
    assert t.edges == 1
    assert phi_inverse(t) == Permutation.identity(1)


def test_long_cycle_is_a_star():
    t = phi(long_cycle(6))
    white, black, _ = t.degrees()
    assert white == (6,) and black == (1,) * 6


def test_example_tree():
    t = phi(EXAMPLE)
    white, black, _ = t.degrees()
    assert white == (5, 3, 3) + (1,) * 6
    assert black == (5, 3, 3) + (1,) * 6
    assert phi_inverse(t) == EXAMPLE
    labels = phi_labels(t)
    assert sorted(labels.values()) == list(range(1, 18))


def test_example_tree_pair():
    white, black = onc_tree_pair(EXAMPLE)
    assert tree_to_string(white) == "((()())())"
    assert tree_to_string(black) == "(()(()()()())((()())())())"
    assert onc_tree_pair_inverse((white, black)) == EXAMPLE


def test_phi_errors():
    with pytest.raises(NotNoncrossing):
        phi(parse_permutation("(1 3)(2 4)", 4))
    with pytest.raises(NotOnc):
        onc_tree_pair(parse_permutation("(2 4 5)", 5))
    with pytest.raises(NotOnc):
        onc_even_tree(Permutation.identity(5))


@pytest.mark.parametrize("N", range(1, 10))
def test_phi_round_trip_and_degrees(N):
    assert phi_round_trip(N)[0]
    assert degree_dictionary(N)[0]


@given(nc_of(9))
def test_phi_round_trip_property(x):
    t = phi(x)
    assert t.edges == 9
    assert phi_inverse(t) == x
    json.loads(t.to_json())
    assert "--" in t.to_dot(phi_labels(t))


@pytest.mark.parametrize("N", range(1, 11))
def test_onc_tree_encodings(N):
    assert onc_tree_checks(N)[0]


@pytest.mark.parametrize("N", [4, 6, 8])
def test_even_case_exceptional_vertex(N):
    c = long_cycle(N)
    for x in enumerate_onc(N):
        y = compose(inverse(x), c)
        even_y = [cyc for cyc in y.all_cycles() if len(cyc) % 2 == 0]
        assert all(len(cyc) % 2 for cyc in x.all_cycles())
        # the one even-degree vertex is the black vertex carrying edge N
        assert len(even_y) == 1 and N in even_y[0]


def test_even_ternary_examples():
    assert even_ternary(()) is None
    assert ternary_even(None) == ()
    assert count_even_trees(4) == 3 == len(enumerate_even_trees(4))
    assert sum(count_even_trees(e) * count_even_trees(8 - e) for e in range(9)) == 143
    with pytest.raises(WrongFlavor):
        even_ternary(((),))
    with pytest.raises(WrongFlavor):
        PlaneRootedTree(((),), EVEN)
    assert PlaneRootedTree((None, None, None), TERNARY).size == 1


@pytest.mark.parametrize("edges", range(0, 11))
def test_even_tree_counts(edges):
    trees = enumerate_even_trees(edges)
    assert len(trees) == count_even_trees(edges) == len(set(trees))
    assert all(is_even_tree(t) and tree_edges(t) == edges for t in trees)
    if edges % 2 == 0:
        assert {even_ternary(t) for t in trees} == set(enumerate_ternary_trees(edges // 2))


@given(st.integers(0, 5).flatmap(lambda m: st.sampled_from(enumerate_even_trees(2 * m))))
def test_even_ternary_round_trip(t):
    assert ternary_even(even_ternary(t)) == t
    assert tree_from_string(tree_to_string(t)) == t


def test_tree_string_errors():
    with pytest.raises(MalformedTree):
        tree_from_string("(()")
    with pytest.raises(MalformedTree):
        tree_from_string("()()")


def test_even_tree_inverse_errors():
    with pytest.raises(WrongFlavor):
        onc_even_tree_inverse(())
