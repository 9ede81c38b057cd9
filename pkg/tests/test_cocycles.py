import pytest

import utils.config
from cycles.cocycles import (
    bond_of,
    cut_signed,
    directed_cocycles_through,
    eliminate_preserving,
    enumerate_cocycles,
    fundamental_cocycle,
    fundamental_cycle,
    is_bond,
    lift_cocycle,
)
from cycles.signed_sets import SignedEdgeSet, check_orthogonality
from cycles.spanning_trees import SpanningTree, enumerate_spanning_trees
from graph.ordered_digraph import build_graph, delete
from utils.config import SolverConfig
from utils.errors import (
    EliminationError,
    GraphError,
    GraphTooLargeError,
    MissingTraceError,
    NotACocycleError,
)


def bond_with_support(g, support):
    return next(bond for bond in enumerate_cocycles(g) if bond.support == frozenset(support))


def test_parallel_pair_has_one_bond(p2):
    bonds = enumerate_cocycles(p2)
    assert len(bonds) == 1
    assert bonds[0].signed == SignedEdgeSet.of([1, 2])
    assert bonds[0].side == {"u"}


def test_triangle_bonds(t3):
    bonds = enumerate_cocycles(t3)
    assert [bond.signed for bond in bonds] == [
        SignedEdgeSet.of([1, 2]),
        SignedEdgeSet.of([1, 3]),
        SignedEdgeSet.of([2], [3]),
    ]
    assert [bond.side for bond in bonds] == [{"u"}, {"u", "v"}, {"u", "w"}]
    assert bonds[2].negated().signed == SignedEdgeSet.of([3], [2])
    assert not bonds[2].is_directed()


def test_directed_cocycles_through_min(t3, example):
    assert directed_cocycles_through(t3, 1) == [SignedEdgeSet.of([1, 2]), SignedEdgeSet.of([1, 3])]
    supports = [c.sorted_support for c in directed_cocycles_through(example, 1)]
    assert supports == [(1, 2, 3), (1, 2, 4, 6), (1, 3, 5, 8), (1, 4, 5, 6, 8), (1, 4, 5, 7)]
    assert all(c.is_positive() for c in directed_cocycles_through(example, 1))


def test_bond_enumeration_is_bounded(example, monkeypatch):
    monkeypatch.setattr(utils.config, "_config", SolverConfig(max_vertices=3))
    with pytest.raises(GraphTooLargeError):
        enumerate_cocycles(example)


def test_cut_signed(example):
    assert cut_signed(example, {"x"}) == SignedEdgeSet.of([4, 6], [3])


def test_fundamental_cocycles(t3, p2, example):
    assert fundamental_cocycle(t3, SpanningTree.of([1, 3]), 3) == SignedEdgeSet.of([3], [2])
    assert fundamental_cocycle(t3, SpanningTree.of([1, 3]), 1) == SignedEdgeSet.of([1, 2])
    assert fundamental_cocycle(p2, SpanningTree.of([1]), 1) == SignedEdgeSet.of([1, 2])
    assert fundamental_cocycle(example, SpanningTree.of([1, 4, 5, 7]), 4) == SignedEdgeSet.of([4, 6], [3])
    with pytest.raises(GraphError):
        fundamental_cocycle(t3, SpanningTree.of([1, 3]), 2)


def test_fundamental_cycles(t3, p2, example):
    assert fundamental_cycle(t3, SpanningTree.of([1, 3]), 2) == SignedEdgeSet.of([2, 3], [1])
    assert fundamental_cycle(p2, SpanningTree.of([1]), 2) == SignedEdgeSet.of([2], [1])
    assert fundamental_cycle(example, SpanningTree.of([1, 2, 3, 6]), 4).support == {1, 3, 4}
    with pytest.raises(GraphError):
        fundamental_cycle(t3, SpanningTree.of([1, 3]), 3)


def test_loop_is_its_own_fundamental_cycle():
    g = build_graph(["u", "v"], [(1, "u", "v"), (2, "u", "u")])
    assert fundamental_cycle(g, SpanningTree.of([1]), 2) == SignedEdgeSet.of([2])


def test_fundamental_cycles_are_orthogonal_to_bonds(example):
    bonds = enumerate_cocycles(example)
    for tree in enumerate_spanning_trees(example)[:10]:
        for e in example.edge_set - set(tree):
            cycle = fundamental_cycle(example, tree, e)
            assert all(check_orthogonality(cycle, bond.signed) for bond in bonds)


def test_tree_intersection_identifies_the_bond(example):
    bonds = enumerate_cocycles(example)
    for tree in enumerate_spanning_trees(example):
        traces = {bond.support & frozenset(tree) for bond in bonds}
        assert len(traces) == len(bonds)


def test_is_bond(t3):
    assert is_bond(t3, {1, 2})
    assert is_bond(t3, {2, 3})
    assert not is_bond(t3, {1})
    assert not is_bond(t3, {1, 2, 3})
    assert not is_bond(t3, set())


def test_is_bond_on_a_disconnected_graph():
    g = build_graph(["a", "b", "c", "d"], [(1, "a", "b"), (2, "c", "d")])
    assert is_bond(g, {1})
    assert not is_bond(g, {1, 2})


def test_bond_of(t3):
    assert bond_of(t3, SignedEdgeSet.of([3], [2])).side == {"v"}
    with pytest.raises(NotACocycleError):
        bond_of(t3, SignedEdgeSet.of([2, 3]))
    with pytest.raises(NotACocycleError):
        bond_of(t3, SignedEdgeSet.of([1]))


def test_elimination_of_a_bond_with_itself(t3):
    bond = bond_with_support(t3, {1, 2})
    assert eliminate_preserving(t3, bond, bond, 2) == bond.signed


def test_elimination_on_the_example(example):
    first = bond_with_support(example, {1, 2, 3})
    second = bond_with_support(example, {1, 2, 4, 6}).negated()
    assert second.signed == SignedEdgeSet.of([], [1, 2, 4, 6])
    assert eliminate_preserving(example, first, second, 3) == SignedEdgeSet.of([3], [4, 6])


def test_elimination_keeps_the_preserved_edge(t3):
    first = bond_with_support(t3, {1, 2})
    second = bond_with_support(t3, {2, 3})
    result = eliminate_preserving(t3, first, second, 1)
    assert 1 in result
    assert result.positive <= first.signed.positive | second.signed.positive
    assert result.negative <= first.signed.negative | second.signed.negative


def test_elimination_preconditions(example):
    first = bond_with_support(example, {1, 2, 3})
    second = bond_with_support(example, {1, 2, 4, 6}).negated()
    with pytest.raises(EliminationError):
        eliminate_preserving(example, first, second, 1)
    with pytest.raises(EliminationError):
        eliminate_preserving(example, first, second, 8)


def test_lift_from_the_example_minors(example_g2, example_g3):
    assert lift_cocycle(example_g2, SignedEdgeSet.of([4, 6])) == SignedEdgeSet.of([4, 6], [3])
    assert lift_cocycle(example_g3, SignedEdgeSet.of([5, 8])) == SignedEdgeSet.of([5, 8], [2])


def test_lift_through_an_empty_minor(example):
    same = delete(example, set())
    signed = SignedEdgeSet.of([1, 4, 5, 7])
    assert lift_cocycle(same, signed) == signed


def test_lift_errors(example, example_g2):
    with pytest.raises(MissingTraceError):
        lift_cocycle(example, SignedEdgeSet.of([1, 2, 3]))
    with pytest.raises(NotACocycleError):
        lift_cocycle(example_g2, SignedEdgeSet.of([4]))
