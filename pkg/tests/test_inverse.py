import pytest

from cycles.spanning_trees import SpanningTree
from graph.ordered_digraph import Edge, build_graph, opposite
from orientation.bipolar import bipolar_orientations, orient
from orientation.criterion import alpha_bruteforce
from orientation.inverse import PDirection, invert_alpha
from utils.errors import NotUniactiveError


def test_triangle(t3):
    assert invert_alpha(t3, SpanningTree.of([1, 3])) == t3
    assert invert_alpha(orient(t3, (True, False, False)), SpanningTree.of([1, 3])) == t3
    assert invert_alpha(t3, SpanningTree.of([1, 3]), PDirection.REVERSE) == opposite(t3)


def test_parallel_edges_end_up_parallel():
    g = build_graph(["u", "v"], [(1, "u", "v"), (2, "v", "u")])
    assert invert_alpha(g, SpanningTree.of([1])).edge(2) == Edge(2, "u", "v")


def test_example(example):
    assert invert_alpha(example, SpanningTree.of([1, 4, 5, 7])) == example


def test_requires_a_uniactive_tree(t3):
    with pytest.raises(NotUniactiveError):
        invert_alpha(t3, SpanningTree.of([1, 2]))


@pytest.mark.parametrize("name", ["example", "triangle", "parallel_pair"])
def test_round_trip_on_every_bipolar_orientation(store, name):
    g = store.load(name)
    for _, oriented in bipolar_orientations(g):
        assert invert_alpha(oriented, alpha_bruteforce(oriented)) == oriented
