"""
Edge-ordered directed multigraphs.
Graphs are immutable values. Every minor operation returns a new graph whose
MinorTrace points back to the graph the chain of operations started from,
so cocycles of a minor can be lifted to that graph.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from utils.errors import DanglingEndpointError, DuplicateEdgeError, UnknownEdgeError, VertexLabelError

logger = logging.getLogger(__name__)

EdgeId = int
Vertex = str

# joins the root labels of a contracted vertex; never part of a root label
MERGE_SEPARATOR = "+"


class Edge(NamedTuple):
    """One directed edge; its id is its rank in the edge order."""
    id: EdgeId
    tail: Vertex
    head: Vertex

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def reversed(self) -> "Edge":
        return Edge(self.id, self.head, self.tail)


@dataclass(frozen=True, eq=False)
class MinorTrace:
    """
    Provenance of a minor.
    parent is the graph the chain of minor operations started from;
    vertex_map sends every parent vertex to the minor vertex it became.
    """
    contracted: FrozenSet[EdgeId]
    deleted: FrozenSet[EdgeId]
    parent: "OrderedDigraph"
    vertex_map: Mapping[Vertex, Vertex]


@dataclass(frozen=True)
class OrderedDigraph:
    """
    Directed multigraph on a linearly ordered edge set.
    Loops and parallel edges are allowed; connectivity is not required.
    Equality compares vertices and edges only, never provenance.
    """
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    trace: Optional[MinorTrace] = field(default=None, compare=False, repr=False)

    @cached_property
    def _index(self) -> Dict[EdgeId, Edge]:
        return {edge.id: edge for edge in self.edges}

    @property
    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return tuple(edge.id for edge in self.edges)

    @property
    def edge_set(self) -> FrozenSet[EdgeId]:
        return frozenset(self._index)

    @property
    def min_edge(self) -> EdgeId:
        return self.edges[0].id

    @property
    def max_edge(self) -> EdgeId:
        return self.edges[-1].id

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._index

    def edge(self, e: EdgeId) -> Edge:
        """Get an edge by id."""
        try:
            return self._index[e]
        except KeyError:
            raise UnknownEdgeError(f"Unknown edge id: {e}")

    def root(self) -> "OrderedDigraph":
        """The graph this minor was derived from (itself if not a minor)."""
        return self.trace.parent if self.trace else self

    def root_vertex_map(self) -> Dict[Vertex, Vertex]:
        if self.trace:
            return dict(self.trace.vertex_map)
        return {v: v for v in self.vertices}

    @cached_property
    def multigraph(self) -> nx.MultiGraph:
        """Underlying undirected multigraph, edge keys are edge ids."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id)
        return graph

    @cached_property
    def multidigraph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id)
        return graph

    def __str__(self) -> str:
        arcs = ", ".join(f"{e.id}:{e.tail}->{e.head}" for e in self.edges)
        return f"OrderedDigraph([{arcs}])"


def build_graph(vertices: Iterable, edge_list: Iterable[Tuple]) -> OrderedDigraph:
    """
    Build a validated graph.
    edge_list holds (id, tail, head) triples; ids must be distinct positive
    integers and endpoints declared vertices. Labels must be non-empty and
    must not contain MERGE_SEPARATOR.
    """
    labels = tuple(sorted({str(v) for v in vertices}))
    for label in labels:
        if not label or MERGE_SEPARATOR in label:
            raise VertexLabelError(
                f"Invalid vertex label {label!r}: labels are non-empty and may not contain {MERGE_SEPARATOR!r}"
            )
    declared = set(labels)
    seen: Set[EdgeId] = set()
    edges: List[Edge] = []
    for raw_id, tail, head in edge_list:
        edge_id = int(raw_id)
        if edge_id <= 0:
            raise UnknownEdgeError(f"Edge ids must be positive integers, got {raw_id}")
        if edge_id in seen:
            raise DuplicateEdgeError(f"Duplicate edge id: {edge_id}")
        tail, head = str(tail), str(head)
        for endpoint in (tail, head):
            if endpoint not in declared:
                raise DanglingEndpointError(f"Edge {edge_id} uses undeclared vertex {endpoint!r}")
        seen.add(edge_id)
        edges.append(Edge(edge_id, tail, head))
    edges.sort(key=lambda edge: edge.id)
    return OrderedDigraph(vertices=labels, edges=tuple(edges))


def _check_known(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> FrozenSet[EdgeId]:
    chosen = frozenset(edge_ids)
    unknown = chosen - g.edge_set
    if unknown:
        raise UnknownEdgeError(f"Unknown edge ids: {sorted(unknown)}")
    return chosen


def _derive(g: OrderedDigraph, vertices: Iterable[Vertex], edges: Iterable[Edge],
            contracted: FrozenSet[EdgeId], deleted: FrozenSet[EdgeId],
            relabel: Mapping[Vertex, Vertex]) -> OrderedDigraph:
    """Wrap a minor of g, composing its trace with g's own trace."""
    parent_map = g.root_vertex_map()
    trace = MinorTrace(
        contracted=(g.trace.contracted if g.trace else frozenset()) | contracted,
        deleted=(g.trace.deleted if g.trace else frozenset()) | deleted,
        parent=g.root(),
        vertex_map={v: relabel[w] for v, w in parent_map.items()},
    )
    return OrderedDigraph(
        vertices=tuple(sorted(set(vertices))),
        edges=tuple(sorted(edges, key=lambda edge: edge.id)),
        trace=trace,
    )


def delete(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> OrderedDigraph:
    """Remove edges; vertices are kept, isolated ones included."""
    removed = _check_known(g, edge_ids)
    kept = [edge for edge in g.edges if edge.id not in removed]
    identity = {v: v for v in g.vertices}
    return _derive(g, g.vertices, kept, frozenset(), removed, identity)


def restrict(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> OrderedDigraph:
    """G(F): delete every edge outside F."""
    kept = _check_known(g, edge_ids)
    return delete(g, g.edge_set - kept)


def contract(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> OrderedDigraph:
    """
    Contract edges: endpoints of each non-loop edge are merged and the edge
    removed. Contracting a loop deletes it. Merged vertices are labelled by
    the '+'-joined sorted labels of the root vertices they contain.
    """
    removed = _check_known(g, edge_ids)
    classes = UnionFind(g.vertices)
    for e in removed:
        edge = g.edge(e)
        if not edge.is_loop:
            classes.union(edge.tail, edge.head)

    atoms: Dict[Vertex, Set[Vertex]] = {v: set() for v in g.vertices}
    for root_vertex, current in g.root_vertex_map().items():
        atoms[current].add(root_vertex)

    relabel: Dict[Vertex, Vertex] = {}
    for block in classes.to_sets():
        members = set().union(*(atoms[v] or {v} for v in block))
        label = MERGE_SEPARATOR.join(sorted(members))
        for v in block:
            relabel[v] = label

    kept = [Edge(edge.id, relabel[edge.tail], relabel[edge.head])
            for edge in g.edges if edge.id not in removed]
    return _derive(g, relabel.values(), kept, removed, frozenset(), relabel)


def reverse_edge(g: OrderedDigraph, e: EdgeId) -> OrderedDigraph:
    """-_e G. The result is a new digraph, not a minor, so it carries no trace."""
    g.edge(e)
    edges = tuple(edge.reversed() if edge.id == e else edge for edge in g.edges)
    return OrderedDigraph(vertices=g.vertices, edges=edges)


def opposite(g: OrderedDigraph) -> OrderedDigraph:
    """Reverse every edge."""
    return OrderedDigraph(vertices=g.vertices, edges=tuple(edge.reversed() for edge in g.edges))


def relabel_edges(g: OrderedDigraph, new_ids: Mapping[EdgeId, EdgeId]) -> OrderedDigraph:
    """Same digraph under another edge order (new_ids: old id -> new id)."""
    return build_graph(g.vertices, [(new_ids[edge.id], edge.tail, edge.head) for edge in g.edges])


def is_connected(g: OrderedDigraph) -> bool:
    """Connectivity of the underlying undirected graph."""
    if not g.vertices:
        return False
    return nx.is_connected(g.multigraph)
