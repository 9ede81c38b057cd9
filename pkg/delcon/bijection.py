"""
The whole bijection at once: every bipolar orientation (smallest edge kept
in its stored direction) mapped to its fully optimal spanning tree, built
by deletion/contraction with the minors' tables shared through a memo.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from graph.ordered_digraph import EdgeId, OrderedDigraph, contract, delete
from cycles.spanning_trees import SpanningTree, require_connected
from orientation.activities import beta_invariant, is_uniactive_internal
from orientation.bipolar import (
    Orientation,
    has_bipolar_orientation,
    is_bipolar_minor,
    orient,
    orientation_bits,
    render_bits,
)
from delcon.solver import contraction_wins_by_cycle
from utils.config import resolve_debug
from utils.errors import BijectionViolation, GraphError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass
class BijectionTable:
    """Orientation descriptor (direction bits in edge order) -> alpha."""
    graph: OrderedDigraph
    p: EdgeId
    entries: Dict[Orientation, SpanningTree] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[Orientation, SpanningTree]]:
        return iter(sorted(self.entries.items(), key=lambda item: item[0], reverse=True))

    def tree_for(self, oriented: OrderedDigraph) -> Optional[SpanningTree]:
        return self.entries.get(orientation_bits(self.graph, oriented))

    def render_lines(self) -> List[str]:
        """`bits -> ids`, stored direction first (1 before 0)."""
        return [f"{render_bits(bits)} -> {tree}" for bits, tree in self]


class BijectionBuilder:
    """
    Builds a BijectionTable. Minors are memoized by the pair of bitmasks
    (deleted edges, contracted edges) over the root's edge order.
    """

    def __init__(self, g: OrderedDigraph, debug_assertions: Optional[bool] = None):
        require_connected(g)
        if not g.edges:
            raise GraphError("A graph without edges has no bipolar orientation")
        self.root = OrderedDigraph(vertices=g.vertices, edges=g.edges)
        self.p = self.root.min_edge
        self.debug = resolve_debug(debug_assertions)
        self.rank = {e: i for i, e in enumerate(self.root.edge_ids)}
        self.memo: Dict[Tuple[int, int], Dict[Orientation, SpanningTree]] = {}
        self.node_visits = 0
        self.orientation_steps = 0

    def _key(self, g: OrderedDigraph) -> Tuple[int, int]:
        if g.trace is None:
            return 0, 0
        deleted = sum(1 << self.rank[e] for e in g.trace.deleted)
        contracted = sum(1 << self.rank[e] for e in g.trace.contracted)
        return deleted, contracted

    def _table(self, g: OrderedDigraph) -> Dict[Orientation, SpanningTree]:
        key = self._key(g)
        if key not in self.memo:
            self.memo[key] = self._build(g)
        return self.memo[key]

    def _build(self, g: OrderedDigraph) -> Dict[Orientation, SpanningTree]:
        self.node_visits += 1
        if len(g.edges) == 1:
            return {(True,): SpanningTree((g.edges[0].id,))}

        omega = g.max_edge
        deleted = delete(g, {omega})
        contracted = contract(g, {omega})
        # minors without a bipolar orientation have empty tables
        deletion_table = self._table(deleted) if has_bipolar_orientation(deleted) else {}
        contraction_table = self._table(contracted) if has_bipolar_orientation(contracted) else {}

        table: Dict[Orientation, SpanningTree] = {}
        for minor_bits in set(deletion_table) | set(contraction_table):
            deletion_tree = deletion_table.get(minor_bits)
            contraction_tree = contraction_table.get(minor_bits)
            for omega_bit in (True, False):
                bits = minor_bits + (omega_bit,)
                self.orientation_steps += 1
                oriented = orient(g, bits)
                if deletion_tree is not None and contraction_tree is not None:
                    # both orientations of omega are bipolar; the cycle test splits them
                    if self.debug and not is_bipolar_minor(oriented, self.p):
                        raise InvariantViolation(
                            f"Both minors by edge {omega} are bipolar but {render_bits(bits)} is not"
                        )
                    if contraction_wins_by_cycle(oriented, omega, deletion_tree):
                        table[bits] = contraction_tree.with_edge(omega)
                    else:
                        table[bits] = deletion_tree
                elif is_bipolar_minor(oriented, self.p):
                    table[bits] = deletion_tree if deletion_tree is not None else contraction_tree.with_edge(omega)
        return table

    def build(self) -> BijectionTable:
        entries = self._table(self.root) if has_bipolar_orientation(self.root) else {}
        table = BijectionTable(self.root, self.p, dict(entries))
        if self.debug:
            self._verify(table)
        logger.info("bijection of size %d built from %d minors (%d orientation steps)",
                    len(table), self.node_visits, self.orientation_steps)
        return table

    def _verify(self, table: BijectionTable) -> None:
        trees = list(table.entries.values())
        if len(set(trees)) != len(trees):
            raise BijectionViolation("Two bipolar orientations share a fully optimal spanning tree")
        beta = beta_invariant(self.root)
        if len(trees) != beta:
            raise BijectionViolation(f"{len(trees)} bipolar orientations but beta = {beta}")
        for tree in trees:
            if not is_uniactive_internal(self.root, tree):
                raise BijectionViolation(f"{{{tree}}} is not uniactive internal")


def build_full_bijection(g: OrderedDigraph, p: Optional[EdgeId] = None,
                         debug_assertions: Optional[bool] = None) -> BijectionTable:
    """Stored directions of g are ignored except that p = min(E) keeps its own."""
    if p is not None and g.edges and p != g.min_edge:
        raise GraphError(f"Edge {p} must be the smallest edge, the smallest is {g.min_edge}")
    return BijectionBuilder(g, debug_assertions).build()
