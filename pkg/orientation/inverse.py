"""
Inverse of the fully optimal spanning tree map: orient the underlying graph
in one pass over the edge order so that a given uniactive internal tree is
its fully optimal spanning tree.
"""

import logging
from enum import Enum

from graph.ordered_digraph import OrderedDigraph, reverse_edge
from cycles.cocycles import fundamental_cocycle, fundamental_cycle
from cycles.spanning_trees import SpanningTree, validate_tree
from orientation.activities import is_uniactive_internal
from utils.errors import NotUniactiveError

logger = logging.getLogger(__name__)


class PDirection(Enum):
    """Direction given to the smallest edge."""
    FORWARD = "fwd"
    REVERSE = "rev"


def invert_alpha(g: OrderedDigraph, tree: SpanningTree,
                 p_direction: PDirection = PDirection.FORWARD) -> OrderedDigraph:
    """
    Stored directions of g are ignored except for the smallest edge under
    PDirection.FORWARD. Each later edge e_k is oriented against a, the smallest
    edge of its fundamental cocycle (tree edge) or cycle (non-tree edge);
    a < e_k is already oriented since the tree is uniactive internal.
    """
    validate_tree(g, tree)
    if not is_uniactive_internal(g, tree):
        raise NotUniactiveError(f"{{{tree}}} is not a uniactive internal spanning tree")
    current = OrderedDigraph(vertices=g.vertices, edges=g.edges)
    if p_direction is PDirection.REVERSE:
        current = reverse_edge(current, current.min_edge)
    for e in current.edge_ids[1:]:
        signed = fundamental_cocycle(current, tree, e) if e in tree else fundamental_cycle(current, tree, e)
        a = signed.min_element()
        if signed.sign(a) > 0:
            current = reverse_edge(current, e)
            logger.debug("edge %d reversed against %d", e, a)
    return current
