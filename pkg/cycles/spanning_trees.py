"""
Spanning trees of the underlying graph of an OrderedDigraph.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

from networkx.utils import UnionFind

from graph.ordered_digraph import EdgeId, OrderedDigraph, is_connected
from utils.errors import DisconnectedGraphError, NotSpanningTreeError


@dataclass(frozen=True)
class SpanningTree:
    """Sorted tuple of edge ids."""
    edges: Tuple[EdgeId, ...]

    def __post_init__(self):
        object.__setattr__(self, 'edges', tuple(sorted(self.edges)))

    @classmethod
    def of(cls, edge_ids: Iterable[EdgeId]) -> "SpanningTree":
        return cls(tuple(edge_ids))

    def __contains__(self, e: EdgeId) -> bool:
        return e in self.edges

    def __iter__(self) -> Iterator[EdgeId]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def with_edge(self, e: EdgeId) -> "SpanningTree":
        return SpanningTree(self.edges + (e,))

    def without_edge(self, e: EdgeId) -> "SpanningTree":
        return SpanningTree(tuple(t for t in self.edges if t != e))

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.edges)


def require_connected(g: OrderedDigraph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("The underlying graph must be connected")


def _is_forest(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> bool:
    components = UnionFind(g.vertices)
    for e in edge_ids:
        edge = g.edge(e)
        if components[edge.tail] == components[edge.head]:
            return False
        components.union(edge.tail, edge.head)
    return True


def is_spanning_tree(g: OrderedDigraph, edge_ids: Iterable[EdgeId]) -> bool:
    chosen = list(edge_ids)
    if len(set(chosen)) != len(chosen) or len(chosen) != len(g.vertices) - 1:
        return False
    if any(not g.has_edge(e) for e in chosen):
        return False
    return _is_forest(g, chosen)


def validate_tree(g: OrderedDigraph, tree: SpanningTree) -> SpanningTree:
    if not is_spanning_tree(g, tree.edges):
        raise NotSpanningTreeError(f"{{{tree}}} is not a spanning tree of the graph")
    return tree


def enumerate_spanning_trees(g: OrderedDigraph) -> List[SpanningTree]:
    """All spanning trees, in lexicographic order of their sorted edge ids."""
    require_connected(g)
    candidates = [edge.id for edge in g.edges if not edge.is_loop]
    size = len(g.vertices) - 1
    return [SpanningTree(combo) for combo in combinations(candidates, size)
            if _is_forest(g, combo)]


def lex_min_spanning_tree(g: OrderedDigraph) -> SpanningTree:
    """Greedy by increasing edge id; the lexicographically smallest tree."""
    require_connected(g)
    components = UnionFind(g.vertices)
    chosen: List[EdgeId] = []
    for edge in g.edges:
        if components[edge.tail] != components[edge.head]:
            components.union(edge.tail, edge.head)
            chosen.append(edge.id)
            if len(chosen) == len(g.vertices) - 1:
                break
    return SpanningTree(tuple(chosen))
