"""
Recursive computation of alpha by deletion/contraction of the greatest edge.
"""

import logging
from enum import Enum
from typing import Optional

from graph.ordered_digraph import EdgeId, OrderedDigraph, contract, delete
from cycles.cocycles import fundamental_cocycle, fundamental_cycle
from cycles.spanning_trees import SpanningTree
from orientation.bipolar import is_bipolar_minor, require_bipolar
from utils.config import resolve_debug
from utils.errors import FormulationMismatch, InvariantViolation

logger = logging.getLogger(__name__)


class Formulation(Enum):
    """Which fundamental set decides the branch when both minors are bipolar."""
    CYCLE = "cycle"
    COCYCLE = "cocycle"


def contraction_wins_by_cycle(g: OrderedDigraph, omega: EdgeId, deletion_tree: SpanningTree) -> bool:
    """Same directions of omega and min(C) in C = C(T';omega) selects the contraction."""
    cycle = fundamental_cycle(g, deletion_tree, omega)
    return cycle.sign(cycle.min_element()) > 0


def contraction_wins_by_cocycle(g: OrderedDigraph, omega: EdgeId, contraction_tree: SpanningTree) -> bool:
    """Opposite directions of omega and min(D) in D = C*(T''+omega;omega) selects the contraction."""
    cocycle = fundamental_cocycle(g, contraction_tree.with_edge(omega), omega)
    return cocycle.sign(cocycle.min_element()) < 0


class DelconSolver:
    """
    alpha(G) from alpha(G\\omega) and alpha(G/omega), omega = max(E).
    When both minors are bipolar both trees are computed; with cross_check
    on, the formulation not selected is evaluated too and must agree.
    """

    def __init__(self, formulation: Formulation = Formulation.CYCLE, cross_check: Optional[bool] = None):
        self.formulation = formulation
        self.cross_check = resolve_debug(cross_check)
        self.node_visits = 0

    def solve(self, g: OrderedDigraph) -> SpanningTree:
        p = require_bipolar(g)
        self.node_visits = 0
        tree = self._alpha(g, p)
        logger.debug("delcon alpha = %s after %d nodes", tree, self.node_visits)
        return tree

    def _alpha(self, g: OrderedDigraph, p: EdgeId) -> SpanningTree:
        self.node_visits += 1
        if len(g.edges) == 1:
            return SpanningTree((g.max_edge,))
        omega = g.max_edge
        deleted = delete(g, {omega})
        contracted = contract(g, {omega})
        deletion_ok = is_bipolar_minor(deleted, p)
        contraction_ok = is_bipolar_minor(contracted, p)

        if deletion_ok and not contraction_ok:
            logger.debug("omega=%d: only the deletion is bipolar", omega)
            return self._alpha(deleted, p)
        if contraction_ok and not deletion_ok:
            logger.debug("omega=%d: only the contraction is bipolar", omega)
            return self._alpha(contracted, p).with_edge(omega)
        if not deletion_ok:
            raise InvariantViolation(f"Neither minor by edge {omega} is bipolar w.r.t. {p}")

        deletion_tree = self._alpha(deleted, p)
        contraction_tree = self._alpha(contracted, p)
        by_cycle = by_cocycle = None
        if self.formulation is Formulation.CYCLE or self.cross_check:
            by_cycle = contraction_wins_by_cycle(g, omega, deletion_tree)
        if self.formulation is Formulation.COCYCLE or self.cross_check:
            by_cocycle = contraction_wins_by_cocycle(g, omega, contraction_tree)
        if by_cycle is not None and by_cocycle is not None and by_cycle != by_cocycle:
            raise FormulationMismatch(
                f"Cycle and cocycle tests disagree on edge {omega}: "
                f"alpha(G\\omega)={{{deletion_tree}}}, alpha(G/omega)={{{contraction_tree}}}"
            )
        choose_contraction = by_cycle if self.formulation is Formulation.CYCLE else by_cocycle
        logger.debug("omega=%d: both minors bipolar, %s wins", omega,
                     "contraction" if choose_contraction else "deletion")
        return contraction_tree.with_edge(omega) if choose_contraction else deletion_tree


def alpha_delcon(g: OrderedDigraph, formulation: Formulation = Formulation.CYCLE,
                 cross_check: Optional[bool] = None) -> SpanningTree:
    return DelconSolver(formulation, cross_check).solve(g)
