import pytest

from graph.ordered_digraph import build_graph, delete, reverse_edge
from orientation.bipolar import (
    Characterization,
    bipolar_orientations,
    has_bipolar_orientation,
    is_acyclic,
    is_bipolar,
    is_bipolar_minor,
    is_strongly_connected,
    iter_orientations,
    orient,
    orientation_bits,
    render_bits,
    require_bipolar,
)
from utils.errors import DisconnectedGraphError, GraphError, NotBipolarError, UnknownEdgeError

ALL = list(Characterization)


def test_acyclicity(t3, single_loop):
    assert is_acyclic(t3)
    assert not is_acyclic(reverse_edge(t3, 1))
    assert not is_acyclic(single_loop)
    assert not is_acyclic(build_graph(["u", "v"], [(1, "u", "v"), (2, "v", "u")]))


def test_strong_connectivity(t3):
    assert is_strongly_connected(reverse_edge(t3, 1))
    assert not is_strongly_connected(t3)
    assert is_strongly_connected(build_graph(["u"], []))


@pytest.mark.parametrize("characterization", ALL)
def test_bipolar_examples(characterization, t3, p2, example, k4, single_edge):
    for g in (t3, p2, example, k4, single_edge):
        assert is_bipolar(g, 1, characterization)


@pytest.mark.parametrize("characterization", ALL)
def test_non_bipolar_examples(characterization, t3, single_loop):
    assert not is_bipolar(delete(t3, {3}), 1, characterization)
    assert not is_bipolar(reverse_edge(t3, 2), 1, characterization)
    assert not is_bipolar(single_loop, 1, characterization)


def test_bipolarity_is_relative_to_p(t3):
    assert not is_bipolar(t3, 2)
    assert is_bipolar(reverse_edge(t3, 1), 2) is False


def test_characterizations_agree_on_every_orientation(t3, p2, k4, example):
    for g in (t3, p2, k4, example):
        for _, oriented in iter_orientations(g, fix_min=False):
            answers = {is_bipolar(oriented, 1, c) for c in ALL}
            assert len(answers) == 1, str(oriented)


def test_errors(t3):
    with pytest.raises(DisconnectedGraphError):
        is_bipolar(build_graph(["a", "b", "c"], [(1, "a", "b")]), 1)
    with pytest.raises(UnknownEdgeError):
        is_bipolar(t3, 7)
    with pytest.raises(NotBipolarError):
        require_bipolar(delete(t3, {3}))
    with pytest.raises(NotBipolarError):
        require_bipolar(build_graph(["u"], []))
    with pytest.raises(GraphError):
        require_bipolar(t3, 2)
    assert require_bipolar(t3) == 1


def test_minor_check_tolerates_disconnection(t3):
    assert not is_bipolar_minor(delete(t3, {1, 2}), 3)
    assert not is_bipolar_minor(t3, 9)
    assert is_bipolar_minor(t3, 1)


def test_orientation_bits(t3):
    bits = (True, False, True)
    oriented = orient(t3, bits)
    assert oriented.edge(2).tail == "v"
    assert orientation_bits(t3, oriented) == bits
    assert render_bits(bits) == "101"
    with pytest.raises(GraphError):
        orient(t3, (True,))


def test_orientation_enumeration(t3, k4):
    assert len(list(iter_orientations(t3))) == 4
    assert len(list(iter_orientations(t3, fix_min=False))) == 8
    assert all(bits[0] for bits, _ in iter_orientations(k4))
    assert [bits for bits, _ in bipolar_orientations(t3)] == [(True, True, True)]


def test_has_bipolar_orientation_matches_orientation_count(single_edge, single_loop, two_edge_path, p2, t3, k4):
    for g in (single_edge, p2, t3, k4):
        assert has_bipolar_orientation(g)
        assert any(True for _ in bipolar_orientations(g))
    for g in (single_loop, two_edge_path):
        assert not has_bipolar_orientation(g)
        assert not any(True for _ in bipolar_orientations(g))
    looped = build_graph(["u", "v"], [(1, "u", "v"), (2, "u", "v"), (3, "v", "v")])
    assert not has_bipolar_orientation(looped)
