"""
Cycles and cocycles (bonds) of an ordered digraph.
Bonds are enumerated exhaustively over vertex bipartitions; fundamental
cycles and cocycles come from a spanning tree; cocycles of a minor are
lifted to the graph the minor was taken from.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Set

import networkx as nx
from networkx.utils import UnionFind

from graph.ordered_digraph import EdgeId, OrderedDigraph, Vertex, is_connected
from cycles.signed_sets import SignedEdgeSet
from cycles.spanning_trees import SpanningTree, require_connected, validate_tree
from utils.config import get_config
from utils.errors import (
    EliminationError,
    GraphError,
    GraphTooLargeError,
    InvariantViolation,
    MissingTraceError,
    NotACocycleError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bond:
    """
    A cocycle with one of its shores.
    signed is positive on edges directed from side to rest.
    """
    side: FrozenSet[Vertex]
    rest: FrozenSet[Vertex]
    signed: SignedEdgeSet

    @property
    def support(self) -> FrozenSet[EdgeId]:
        return self.signed.support

    def negated(self) -> "Bond":
        return Bond(self.rest, self.side, -self.signed)

    def is_directed(self) -> bool:
        return not self.signed.negative or not self.signed.positive


def cut_signed(g: OrderedDigraph, side: Iterable[Vertex]) -> SignedEdgeSet:
    """Signed cut of a vertex set: edges leaving it positive, entering negative."""
    shore = frozenset(side)
    positive: Set[EdgeId] = set()
    negative: Set[EdgeId] = set()
    for edge in g.edges:
        tail_in, head_in = edge.tail in shore, edge.head in shore
        if tail_in and not head_in:
            positive.add(edge.id)
        elif head_in and not tail_in:
            negative.add(edge.id)
    return SignedEdgeSet(frozenset(positive), frozenset(negative))


def _induces_connected(g: OrderedDigraph, vertices: FrozenSet[Vertex]) -> bool:
    return bool(vertices) and nx.is_connected(g.multigraph.subgraph(vertices))


def enumerate_cocycles(g: OrderedDigraph) -> List[Bond]:
    """
    One Bond per unordered bipartition with both shores connected.
    side is the shore holding the smallest vertex label. Sorted by support.
    """
    require_connected(g)
    limit = get_config().max_vertices
    if len(g.vertices) > limit:
        raise GraphTooLargeError(
            f"Bond enumeration is exhaustive; {len(g.vertices)} vertices exceeds the limit of {limit}"
        )
    anchor, others = g.vertices[0], g.vertices[1:]
    everything = frozenset(g.vertices)
    bonds: List[Bond] = []
    # the full mask would leave an empty complement
    for mask in range((1 << len(others)) - 1):
        side = frozenset([anchor] + [v for i, v in enumerate(others) if mask >> i & 1])
        rest = everything - side
        if not _induces_connected(g, side) or not _induces_connected(g, rest):
            continue
        signed = cut_signed(g, side)
        if signed.support:
            bonds.append(Bond(side, rest, signed))
    bonds.sort(key=lambda bond: bond.signed.sorted_support)
    logger.debug("enumerated %d bonds on %d vertices", len(bonds), len(g.vertices))
    return bonds


def directed_cocycles_through(g: OrderedDigraph, p: EdgeId) -> List[SignedEdgeSet]:
    """Directed cocycles containing p, signed with p positive (all positive)."""
    g.edge(p)
    result = []
    for bond in enumerate_cocycles(g):
        if p in bond.signed and bond.is_directed():
            result.append(bond.signed.oriented_positive_on(p))
    result.sort(key=lambda signed: signed.sorted_support)
    return result


def fundamental_cocycle(g: OrderedDigraph, tree: SpanningTree, t: EdgeId) -> SignedEdgeSet:
    """C*(T;t): the cut between the two components of T - t, with t positive."""
    validate_tree(g, tree)
    if t not in tree:
        raise GraphError(f"Edge {t} is not an edge of the tree {{{tree}}}")
    components = UnionFind(g.vertices)
    for b in tree:
        if b != t:
            edge = g.edge(b)
            components.union(edge.tail, edge.head)
    tail = g.edge(t).tail
    side = [v for v in g.vertices if components[v] == components[tail]]
    return cut_signed(g, side)


def fundamental_cycle(g: OrderedDigraph, tree: SpanningTree, e: EdgeId) -> SignedEdgeSet:
    """C(T;e): e plus the tree path back from its head to its tail, with e positive."""
    validate_tree(g, tree)
    if e in tree:
        raise GraphError(f"Edge {e} belongs to the tree {{{tree}}}")
    edge = g.edge(e)
    if edge.is_loop:
        return SignedEdgeSet.of(positive=[e])
    tree_graph = nx.Graph()
    tree_graph.add_nodes_from(g.vertices)
    for b in tree:
        tree_edge = g.edge(b)
        tree_graph.add_edge(tree_edge.tail, tree_edge.head, id=b)
    path = nx.shortest_path(tree_graph, edge.head, edge.tail)
    positive, negative = {e}, set()
    for here, there in zip(path, path[1:]):
        b = tree_graph[here][there]['id']
        if g.edge(b).tail == here:
            positive.add(b)
        else:
            negative.add(b)
    return SignedEdgeSet.of(positive, negative)


def _components_without(g: OrderedDigraph, removed: FrozenSet[EdgeId]) -> List[Set[Vertex]]:
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertices)
    for edge in g.edges:
        if edge.id not in removed:
            graph.add_edge(edge.tail, edge.head)
    return [set(component) for component in nx.connected_components(graph)]


def is_bond(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> bool:
    """
    True iff the edge set is a cocycle (inclusion-minimal cut) of g.
    g may be disconnected: removing a cocycle splits exactly one component
    in two, and every removed edge joins those two parts.
    """
    support = frozenset(edge_ids)
    if not support or not support <= g.edge_set:
        return False
    before = nx.number_connected_components(g.multigraph)
    components = _components_without(g, support)
    if len(components) != before + 1:
        return False
    owner = {v: i for i, component in enumerate(components) for v in component}
    crossings = {frozenset((owner[g.edge(e).tail], owner[g.edge(e).head])) for e in support}
    return len(crossings) == 1 and all(len(pair) == 2 for pair in crossings)


def bond_of(g: OrderedDigraph, signed: SignedEdgeSet) -> Bond:
    """Recover the shore of a signed cocycle; positive edges leave the shore."""
    if not is_connected(g) or not is_bond(g, signed.support):
        raise NotACocycleError(f"{signed} is not a cocycle of the graph")
    first, second = _components_without(g, signed.support)
    witness = min(signed.support)
    edge = g.edge(witness)
    leaves_first = edge.tail in first
    side = first if leaves_first == (signed.sign(witness) > 0) else second
    bond = Bond(frozenset(side), frozenset(g.vertices) - frozenset(side), cut_signed(g, side))
    if bond.signed != signed:
        raise NotACocycleError(f"{signed} has signs inconsistent with the digraph")
    return bond


def eliminate_preserving(g: OrderedDigraph, first: Bond, second: Bond, f: EdgeId) -> SignedEdgeSet:
    """
    Cocycle D with f in D, D+ within first+ and second+, D- within first- and
    second-, avoiding every edge with opposite signs in first and second.
    The cut of the shore first.side & second.side (or first.side | second.side
    when f does not cross it) holds no conflicting edge; the bond through f
    is extracted from that cut.
    """
    s1, s2 = first.signed.sign(f), second.signed.sign(f)
    if s1 == 0 and s2 == 0:
        raise EliminationError(f"Edge {f} belongs to neither cocycle")
    if s1 * s2 < 0:
        raise EliminationError(f"Edge {f} has opposite signs in the two cocycles")
    if first.signed == second.signed:
        return first.signed

    everything = frozenset(g.vertices)
    shore: Optional[FrozenSet[Vertex]] = None
    for candidate in (first.side & second.side, first.side | second.side):
        if candidate and candidate != everything and f in cut_signed(g, candidate):
            shore = candidate
            break
    if shore is None:
        raise InvariantViolation(f"No elimination cut contains edge {f}")

    edge = g.edge(f)
    inner, outer = (edge.tail, edge.head) if edge.tail in shore else (edge.head, edge.tail)
    kept = next(c for c in nx.connected_components(g.multigraph.subgraph(shore)) if inner in c)
    beyond = next(c for c in nx.connected_components(g.multigraph.subgraph(everything - kept))
                  if outer in c)
    result = cut_signed(g, everything - frozenset(beyond))

    conflicts = ((first.signed.positive & second.signed.negative)
                 | (first.signed.negative & second.signed.positive))
    if (f not in result
            or not result.positive <= first.signed.positive | second.signed.positive
            or not result.negative <= first.signed.negative | second.signed.negative
            or result.support & conflicts):
        raise InvariantViolation(f"Elimination produced {result}, which breaks its guarantees")
    return result


def lift_cocycle(minor: OrderedDigraph, signed: SignedEdgeSet) -> SignedEdgeSet:
    """
    The unique cocycle D of the parent with D & contracted = {} and
    D - deleted = signed, carrying the same signs.
    """
    if minor.trace is None:
        raise MissingTraceError("The graph carries no minor trace")
    if not is_connected(minor):
        raise GraphError("Cocycles can only be lifted from a connected minor")
    bond = bond_of(minor, signed)
    trace = minor.trace
    side = [v for v, image in trace.vertex_map.items() if image in bond.side]
    lifted = cut_signed(trace.parent, side)
    if lifted.support & trace.contracted or lifted.without(trace.deleted) != signed:
        raise InvariantViolation(f"Lift of {signed} gave {lifted}, which does not induce it")
    return lifted
