"""
Bipolarity tests.
A digraph is bipolar w.r.t. p when it is acyclic with a unique source and a
unique sink which are the extremities of p. Three equivalent
characterizations are implemented independently so they can cross-check.
"""

import logging
from enum import Enum
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

import networkx as nx

from graph.ordered_digraph import Edge, EdgeId, OrderedDigraph, is_connected, reverse_edge
from cycles.cocycles import enumerate_cocycles
from cycles.spanning_trees import require_connected
from utils.errors import GraphError, NotBipolarError

logger = logging.getLogger(__name__)

Orientation = Tuple[bool, ...]


class Characterization(Enum):
    """Which definition of bipolarity to evaluate."""
    SOURCE_SINK = "source_sink"
    COCYCLE = "cocycle"
    DUAL = "dual"


def is_acyclic(g: OrderedDigraph) -> bool:
    """No directed cycle; a loop and an antiparallel pair both count as cycles."""
    if any(edge.is_loop for edge in g.edges):
        return False
    return nx.is_directed_acyclic_graph(g.multidigraph)


def is_strongly_connected(g: OrderedDigraph) -> bool:
    if not g.vertices:
        return False
    return nx.is_strongly_connected(g.multidigraph)


def _source_sink(g: OrderedDigraph, p: Edge) -> bool:
    if p.is_loop or not is_acyclic(g):
        return False
    digraph = g.multidigraph
    sources = [v for v in g.vertices if digraph.in_degree(v) == 0]
    sinks = [v for v in g.vertices if digraph.out_degree(v) == 0]
    return sources == [p.tail] and sinks == [p.head]


def _cocycle(g: OrderedDigraph, p: Edge) -> bool:
    covered = set()
    for bond in enumerate_cocycles(g):
        if not bond.is_directed():
            continue
        if p.id not in bond.signed:
            return False
        covered |= bond.support
    return covered == g.edge_set


def _dual(g: OrderedDigraph, p: Edge) -> bool:
    if not is_acyclic(g):
        return False
    # a lone isthmus is bipolar although reversing it gives no strong connectivity
    if len(g.edges) == 1:
        return True
    return is_strongly_connected(reverse_edge(g, p.id))


_CHECKS = {
    Characterization.SOURCE_SINK: _source_sink,
    Characterization.COCYCLE: _cocycle,
    Characterization.DUAL: _dual,
}


def is_bipolar(g: OrderedDigraph, p: EdgeId,
               characterization: Characterization = Characterization.SOURCE_SINK) -> bool:
    """Bipolarity of a connected digraph w.r.t. edge p."""
    require_connected(g)
    return _CHECKS[characterization](g, g.edge(p))


def is_bipolar_minor(g: OrderedDigraph, p: EdgeId) -> bool:
    """Like is_bipolar, but a disconnected graph or a missing p answers False."""
    if not g.has_edge(p) or not is_connected(g):
        return False
    return _source_sink(g, g.edge(p))


def has_bipolar_orientation(g: OrderedDigraph) -> bool:
    """
    Some orientation is bipolar w.r.t. the smallest edge, i.e. beta(g) > 0:
    a single non-loop edge, or a loopless nonseparable graph.
    """
    if not g.edges or not is_connected(g):
        return False
    if any(edge.is_loop for edge in g.edges):
        return False
    if len(g.edges) == 1:
        return True
    simple = nx.Graph(g.multigraph)
    return simple.number_of_nodes() <= 2 or nx.is_biconnected(simple)


def require_bipolar(g: OrderedDigraph, p: Optional[EdgeId] = None) -> EdgeId:
    """
    Check that g is bipolar w.r.t. p (default and required: the smallest edge).
    Returns p.
    """
    if not g.edges:
        raise NotBipolarError("A graph without edges has no bipolar orientation")
    if p is None:
        p = g.min_edge
    elif p != g.min_edge:
        raise GraphError(f"Edge {p} must be the smallest edge, the smallest is {g.min_edge}")
    if not is_bipolar(g, p):
        raise NotBipolarError(f"The digraph is not bipolar w.r.t. edge {p}")
    return p


def orient(g: OrderedDigraph, bits: Sequence[bool]) -> OrderedDigraph:
    """
    Orientation of g's underlying graph: bits[k] True keeps the stored
    direction of the k-th edge in edge order, False reverses it.
    """
    if len(bits) != len(g.edges):
        raise GraphError(f"Expected {len(g.edges)} direction bits, got {len(bits)}")
    edges = tuple(edge if keep else edge.reversed() for edge, keep in zip(g.edges, bits))
    return OrderedDigraph(vertices=g.vertices, edges=edges)


def orientation_bits(base: OrderedDigraph, oriented: OrderedDigraph) -> Orientation:
    """Direction bits of oriented relative to the stored directions of base."""
    bits = []
    for edge in base.edges:
        other = oriented.edge(edge.id)
        if {other.tail, other.head} != {edge.tail, edge.head}:
            raise GraphError(f"Edge {edge.id} joins different vertices in the two graphs")
        bits.append(other.tail == edge.tail)
    return tuple(bits)


def render_bits(bits: Orientation) -> str:
    return "".join("1" if keep else "0" for keep in bits)


def iter_orientations(g: OrderedDigraph, fix_min: bool = True) -> Iterator[Tuple[Orientation, OrderedDigraph]]:
    """All 2^m orientations (2^(m-1) with the smallest edge kept forward)."""
    free = len(g.edges) - 1 if fix_min else len(g.edges)
    for tail_bits in product((True, False), repeat=free):
        bits = ((True,) + tail_bits) if fix_min else tail_bits
        yield bits, orient(g, bits)


def bipolar_orientations(g: OrderedDigraph, fix_min: bool = True) -> Iterator[Tuple[Orientation, OrderedDigraph]]:
    """Orientations that are bipolar w.r.t. the smallest edge."""
    require_connected(g)
    p = g.min_edge
    for bits, oriented in iter_orientations(g, fix_min):
        if _source_sink(oriented, oriented.edge(p)):
            yield bits, oriented
