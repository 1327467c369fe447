import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given

from arbor import (
    EdgeSubset,
    Mode,
    Outcome,
    build_digraph,
    classify_spanning_tree,
    degree,
    has_directed_cycle,
    is_strongly_connected,
    random_digraph,
)
from arbor.errors import (
    DuplicateLabel,
    InvalidEdgeSubset,
    NonPositiveWeight,
    ParallelEdge,
    SelfLoop,
    UnknownEndpoint,
    WrongSubsetSize,
)

from conftest import digraphs
from oracles import parent_choice_trees, reachability, triples


def test_running_example_shape(g):
    assert (g.p, g.q) == (3, 5)
    assert g.labels == ["v1", "v2", "v3"]
    assert [e.name for e in g.edges] == ["e1", "e2", "e3", "e4", "e5"]
    assert [(e.source, e.target) for e in g.edges] == [(0, 1), (1, 2), (2, 1), (2, 0), (0, 2)]
    assert not g.weighted


def test_single_vertex():
    g = build_digraph(["a"], [])
    assert (g.p, g.q) == (1, 0)


@pytest.mark.parametrize(
    "labels, edges, error",
    [
        (["v1", "v2"], [("v1", "v1")], SelfLoop),
        (["v1", "v1"], [], DuplicateLabel),
        (["v1", "v2"], [("v1", "v2"), ("v1", "v2")], ParallelEdge),
        (["v1", "v2"], [("v1", "v2", 0)], NonPositiveWeight),
        (["v1", "v2"], [("v1", "v2", Fraction(-1, 2))], NonPositiveWeight),
        (["v1", "v2"], [("v1", "v9")], UnknownEndpoint),
    ],
)
def test_build_errors(labels, edges, error):
    with pytest.raises(error):
        build_digraph(labels, edges)


def test_antiparallel_edges_allowed():
    g = build_digraph(["a", "b"], [("a", "b"), ("b", "a")])
    assert g.q == 2


def test_empty_label_list_rejected():
    with pytest.raises(ValueError):
        build_digraph([], [])


def test_weighted_flag(gw):
    assert gw.weighted
    assert [e.weight for e in gw.edges] == [2, 3, 5, 7, 11]
    plain = gw.unweighted()
    assert not plain.weighted
    assert all(e.weight == 1 for e in plain.edges)


def test_degrees(g):
    assert [degree(g, v, "in") for v in g.labels] == [1, 2, 2]
    assert [degree(g, v, "out") for v in g.labels] == [2, 1, 2]
    assert [degree(g, v, "in", EdgeSubset()) for v in g.labels] == [0, 0, 0]
    assert [degree(g, v, "out", []) for v in g.labels] == [0, 0, 0]
    assert degree(g, "v2", "in", {0, 3}) == 1


@given(digraphs())
def test_degree_sums(g):
    assert sum(degree(g, v, "in") for v in g.vertices) == g.q
    assert sum(degree(g, v, "out") for v in g.vertices) == g.q
    for v in g.vertices:
        assert degree(g, v, "in") == sum(1 for e in g.edges if e.target == v.index)


def test_cycles(g):
    assert has_directed_cycle(g, [1, 2])  # e2, e3
    assert not has_directed_cycle(g, [0, 3])  # e1, e4
    assert has_directed_cycle(g, [0, 1, 3])  # e1, e2, e4
    assert has_directed_cycle(g, [3, 4])
    assert not has_directed_cycle(g, [])
    assert has_directed_cycle(g)


def test_subset_validation(g):
    with pytest.raises(InvalidEdgeSubset):
        has_directed_cycle(g, [0, 7])
    with pytest.raises(InvalidEdgeSubset):
        EdgeSubset([1, 1])
    assert EdgeSubset([3, 0]).names() == ["e1", "e4"]
    assert str(EdgeSubset([3, 0])) == "{e1,e4}"


def test_classify_examples(g):
    assert classify_spanning_tree(g, [0, 3], "v3", Mode.OUTGOING).is_tree
    assert classify_spanning_tree(g, [1, 4], "v3", Mode.INCOMING).is_tree
    c = classify_spanning_tree(g, [1, 2], "v3", Mode.OUTGOING)
    # v1 has in-degree 0, which is checked before the cycle
    assert c.outcome is Outcome.BAD_NON_ROOT_DEGREE
    assert c.vertex == 0
    assert c.describe(g) == "BadNonRootDegree(v1)"


def test_classify_cycle_outcome():
    g = build_digraph(["r", "x", "y", "z"], [("r", "x"), ("y", "z"), ("z", "y"), ("y", "r"), ("x", "y")])
    # r->x, y->z, z->y: every non-root has in-degree 1 and r has 0, but y and z form a cycle
    c = classify_spanning_tree(g, [0, 1, 2], "r", "outgoing")
    assert c.outcome is Outcome.CONTAINS_CYCLE
    # y->z, y->r, x->y: x has in-degree 0 and is reported before anything else
    c = classify_spanning_tree(g, [1, 3, 4], "r", "outgoing")
    assert (c.outcome, c.vertex) == (Outcome.BAD_NON_ROOT_DEGREE, 1)


@given(digraphs(max_p=5))
def test_root_degree_failure_is_shadowed(g):
    # p - 1 edges with in-degree 1 at all p - 1 non-roots leave nothing for the root
    for s in itertools.combinations(range(g.q), g.p - 1):
        for r in range(g.p):
            for mode in Mode:
                assert classify_spanning_tree(g, s, r, mode).outcome is not Outcome.ROOT_HAS_WRONG_DEGREE


def test_classify_wrong_size(g):
    with pytest.raises(WrongSubsetSize):
        classify_spanning_tree(g, [0], "v3", "outgoing")


def test_single_vertex_tree():
    g = build_digraph(["a"], [])
    for mode in Mode:
        assert classify_spanning_tree(g, [], "a", mode).is_tree


@given(digraphs(max_p=5))
def test_classification_matches_parent_oracle(g):
    for r in range(g.p):
        for mode in Mode:
            trees = [
                s
                for s in itertools.combinations(range(g.q), g.p - 1)
                if classify_spanning_tree(g, s, r, mode).is_tree
            ]
            assert trees == parent_choice_trees(g.p, triples(g), r, mode.value)


@given(digraphs(max_p=4))
def test_tree_implies_conditions(g):
    for s in itertools.combinations(range(g.q), g.p - 1):
        for r in range(g.p):
            c = classify_spanning_tree(g, s, r, "outgoing")
            if c.is_tree:
                assert not has_directed_cycle(g, s)
                assert degree(g, r, "in", s) == 0
                assert all(degree(g, v, "in", s) == 1 for v in range(g.p) if v != r)


@given(digraphs(max_p=4))
def test_reversal_swaps_modes(g):
    rev = g.reverse()
    for s in itertools.combinations(range(g.q), g.p - 1):
        for r in range(g.p):
            assert classify_spanning_tree(g, s, r, "outgoing") == classify_spanning_tree(rev, s, r, "incoming")


def test_strong_connectivity_examples(g):
    assert is_strongly_connected(g)
    assert is_strongly_connected(build_digraph(["a"], []))
    assert not is_strongly_connected(build_digraph(["v1", "v2"], [("v1", "v2")]))


@given(digraphs(max_p=6))
def test_strong_connectivity_matches_closure(g):
    reach = reachability(g.p, triples(g))
    assert is_strongly_connected(g) == all(all(row) for row in reach)


def test_random_digraph_is_reproducible():
    a = random_digraph(5, 0.5, random.Random(3), weighted=True)
    b = random_digraph(5, 0.5, random.Random(3), weighted=True)
    assert a == b
    assert a.weighted
    assert all(0 < e.weight for e in a.edges)


def test_vertex_resolution(g):
    assert g.vertex("v2").index == 1
    assert g.vertex(2).label == "v3"
    assert g.vertex(g.vertices[0]) is g.vertices[0]
    with pytest.raises(UnknownEndpoint):
        g.vertex("v9")
    with pytest.raises(UnknownEndpoint):
        g.vertex(3)
