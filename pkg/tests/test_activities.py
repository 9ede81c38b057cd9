from cycles.spanning_trees import SpanningTree
from graph.ordered_digraph import relabel_edges
from orientation.activities import (
    activities,
    beta_invariant,
    is_uniactive_internal,
    uniactive_internal_trees,
)


def test_activity_counts(t3, example):
    assert activities(t3, SpanningTree.of([1, 3])).counts() == (1, 0)
    record = activities(t3, SpanningTree.of([1, 2]))
    assert record.internally_active == {1, 2}
    assert record.external == 0
    assert activities(example, SpanningTree.of([1, 4, 5, 7])).counts() == (1, 0)


def test_uniactive_trees(t3, p2, example):
    assert is_uniactive_internal(t3, SpanningTree.of([1, 3]))
    assert not is_uniactive_internal(t3, SpanningTree.of([2, 3]))
    assert uniactive_internal_trees(t3) == [SpanningTree.of([1, 3])]
    assert uniactive_internal_trees(p2) == [SpanningTree.of([1])]
    assert SpanningTree.of([1, 4, 5, 7]) in uniactive_internal_trees(example)


def test_beta_small_graphs(t3, p2, single_edge, two_edge_path):
    assert beta_invariant(t3) == 1
    assert beta_invariant(p2) == 1
    assert beta_invariant(single_edge) == 1
    assert beta_invariant(two_edge_path) == 0


def test_beta_does_not_depend_on_the_edge_order(example, k4):
    for g in (example, k4):
        m = len(g.edges)
        reversed_order = relabel_edges(g, {e: m + 1 - e for e in g.edge_ids})
        assert beta_invariant(reversed_order) == beta_invariant(g)
