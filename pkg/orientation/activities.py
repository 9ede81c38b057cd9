"""
Internal and external activities of spanning trees, uniactive internal
trees and the beta invariant.
"""

from dataclasses import dataclass
from typing import FrozenSet, List

from graph.ordered_digraph import EdgeId, OrderedDigraph
from cycles.cocycles import fundamental_cocycle, fundamental_cycle
from cycles.spanning_trees import SpanningTree, enumerate_spanning_trees, require_connected, validate_tree


@dataclass(frozen=True)
class ActivityRecord:
    """Active edges of a spanning tree under the graph's edge order."""
    internally_active: FrozenSet[EdgeId]
    externally_active: FrozenSet[EdgeId]

    @property
    def internal(self) -> int:
        return len(self.internally_active)

    @property
    def external(self) -> int:
        return len(self.externally_active)

    def counts(self):
        return self.internal, self.external


def activities(g: OrderedDigraph, tree: SpanningTree) -> ActivityRecord:
    """
    A tree edge is internally active when it is the smallest edge of its
    fundamental cocycle; a non-tree edge is externally active when it is
    the smallest edge of its fundamental cycle.
    """
    validate_tree(g, tree)
    internal = {t for t in tree if fundamental_cocycle(g, tree, t).min_element() == t}
    external = {e for e in g.edge_ids
                if e not in tree and fundamental_cycle(g, tree, e).min_element() == e}
    return ActivityRecord(frozenset(internal), frozenset(external))


def is_uniactive_internal(g: OrderedDigraph, tree: SpanningTree) -> bool:
    """Internal activity 1, external activity 0, min(E) in the tree."""
    record = activities(g, tree)
    return g.min_edge in tree and record.counts() == (1, 0)


def uniactive_internal_trees(g: OrderedDigraph) -> List[SpanningTree]:
    require_connected(g)
    if not g.edges:
        return []
    return [tree for tree in enumerate_spanning_trees(g) if is_uniactive_internal(g, tree)]


def beta_invariant(g: OrderedDigraph) -> int:
    """Number of uniactive internal spanning trees; independent of the edge order."""
    return len(uniactive_internal_trees(g))
