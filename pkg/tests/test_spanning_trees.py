import numpy as np
import pytest

from cycles.spanning_trees import (
    SpanningTree,
    enumerate_spanning_trees,
    is_spanning_tree,
    lex_min_spanning_tree,
    validate_tree,
)
from graph.ordered_digraph import build_graph
from utils.errors import DisconnectedGraphError, NotSpanningTreeError


def kirchhoff_count(g):
    """Matrix-tree theorem on the underlying multigraph."""
    index = {v: i for i, v in enumerate(g.vertices)}
    laplacian = np.zeros((len(g.vertices), len(g.vertices)))
    for edge in g.edges:
        if edge.is_loop:
            continue
        a, b = index[edge.tail], index[edge.head]
        laplacian[a, a] += 1
        laplacian[b, b] += 1
        laplacian[a, b] -= 1
        laplacian[b, a] -= 1
    return int(round(np.linalg.det(laplacian[1:, 1:])))


def test_tree_value():
    tree = SpanningTree.of([7, 1, 5, 4])
    assert tree.edges == (1, 4, 5, 7)
    assert str(tree) == "1 4 5 7"
    assert 5 in tree and 2 not in tree
    assert tree.without_edge(7).with_edge(2) == SpanningTree.of([1, 2, 4, 5])


def test_small_enumerations(t3, p2):
    assert enumerate_spanning_trees(t3) == [SpanningTree.of(ids) for ids in ((1, 2), (1, 3), (2, 3))]
    assert enumerate_spanning_trees(p2) == [SpanningTree.of([1]), SpanningTree.of([2])]


def test_loops_never_enter_a_tree():
    g = build_graph(["u", "v"], [(1, "u", "u"), (2, "u", "v")])
    assert enumerate_spanning_trees(g) == [SpanningTree.of([2])]


@pytest.mark.parametrize("name", ["triangle", "parallel_pair", "example"])
def test_count_matches_matrix_tree_theorem(store, name):
    g = store.load(name)
    assert len(enumerate_spanning_trees(g)) == kirchhoff_count(g)


def test_lex_min(t3, example, two_edge_path):
    assert lex_min_spanning_tree(t3) == SpanningTree.of([1, 2])
    assert lex_min_spanning_tree(example) == SpanningTree.of([1, 2, 3, 6])
    assert lex_min_spanning_tree(two_edge_path) == SpanningTree.of([1, 2])
    assert lex_min_spanning_tree(example) == enumerate_spanning_trees(example)[0]


def test_validation(t3):
    assert is_spanning_tree(t3, [1, 3])
    assert not is_spanning_tree(t3, [1])
    assert not is_spanning_tree(t3, [1, 1])
    assert not is_spanning_tree(t3, [1, 9])
    with pytest.raises(NotSpanningTreeError):
        validate_tree(t3, SpanningTree.of([1, 2, 3]))


def test_disconnected_graph_has_no_tree():
    g = build_graph(["a", "b", "c"], [(1, "a", "b")])
    with pytest.raises(DisconnectedGraphError):
        enumerate_spanning_trees(g)
