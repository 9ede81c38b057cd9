"""
Computes alpha by a sequence of optimal cocycles.
Each iteration takes the optimal cocycle C_opt of the current optimizable
digraph, adds t = min(E - C_opt) to the tree, and passes to a minor in
which t becomes the infinity edge.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from graph.ordered_digraph import EdgeId, OrderedDigraph, contract, is_connected, restrict
from cycles.cocycles import (
    directed_cocycles_through,
    enumerate_cocycles,
    fundamental_cycle,
    is_bond,
    lift_cocycle,
)
from cycles.signed_sets import SignedEdgeSet
from cycles.spanning_trees import SpanningTree, is_spanning_tree
from orientation.bipolar import require_bipolar
from optimizer.optimizable import OptimizableDigraph, make_optimizable
from optimizer.ordering import SELECTORS, Strategy, sort_descending
from utils.config import resolve_debug
from utils.errors import InvariantViolation, OptimizableDigraphError

logger = logging.getLogger(__name__)


def candidate_cocycles(od: OptimizableDigraph) -> List[SignedEdgeSet]:
    """
    Signed cocycles with p positive, positive on the ground set, whose
    ground part is a cocycle of G(E). Greatest first.
    """
    ground_graph = restrict(od.graph, od.ground)
    candidates = []
    for bond in enumerate_cocycles(od.graph):
        if od.p not in bond.signed:
            continue
        signed = bond.signed.oriented_positive_on(od.p)
        on_ground = signed.restricted_to(od.ground)
        if on_ground.negative or not is_bond(ground_graph, on_ground.support):
            continue
        candidates.append(signed)
    return sort_descending(od, candidates)


def optimal_cocycle(od: OptimizableDigraph, strategy: Strategy = Strategy.COMPARATOR) -> SignedEdgeSet:
    """The maximal candidate cocycle."""
    candidates = candidate_cocycles(od)
    if not candidates:
        raise InvariantViolation(f"No candidate cocycle in optimizable digraph {od.describe()}")
    return SELECTORS[strategy](od, candidates)


@dataclass
class TraceStep:
    index: int
    graph: OrderedDigraph = field(repr=False, compare=False)
    p: EdgeId
    ground: Tuple[EdgeId, ...]
    objective: Tuple[EdgeId, ...]
    c_opt: SignedEdgeSet
    t: EdgeId
    next_objective: Optional[Tuple[EdgeId, ...]]
    removed: Optional[EdgeId]
    candidates: Tuple[SignedEdgeSet, ...]


@dataclass
class AlgorithmTrace:
    p: EdgeId
    ground: Tuple[EdgeId, ...]
    objective: Tuple[EdgeId, ...]
    steps: List[TraceStep] = field(default_factory=list)
    tree: Optional[SpanningTree] = None

    @property
    def t_sequence(self) -> List[EdgeId]:
        return [step.t for step in self.steps]

    @property
    def removed_sequence(self) -> List[EdgeId]:
        return [step.removed for step in self.steps if step.removed is not None]


class FlagOptimizer:
    """
    Runs the loop for i = 2..r, r = |V| - 1. The last iteration only picks
    t_r, so exactly r - 1 optimizable digraphs are used.
    """

    def __init__(self, strategy: Strategy = Strategy.COMPARATOR, debug_assertions: Optional[bool] = None):
        self.strategy = strategy
        self.debug = resolve_debug(debug_assertions)
        self.digraphs_used = 0

    def run(self, g: OrderedDigraph, emit_trace: bool = False) -> Tuple[SpanningTree, Optional[AlgorithmTrace]]:
        root = OrderedDigraph(vertices=g.vertices, edges=g.edges)
        od = make_optimizable(root)
        trace = AlgorithmTrace(od.p, tuple(sorted(od.ground)), od.objective) if emit_trace else None
        r = len(root.vertices) - 1
        chosen = [od.p]
        self.digraphs_used = 0

        for i in range(2, r + 1):
            self.digraphs_used += 1
            if self.debug:
                self._check_minimum_lemma(od)
            candidates = candidate_cocycles(od)
            if not candidates:
                raise InvariantViolation(f"No candidate cocycle at step {i}: {od.describe()}")
            c_opt = SELECTORS[self.strategy](od, candidates)
            remaining = od.ground - c_opt.support
            if not remaining:
                raise InvariantViolation(f"Optimal cocycle {c_opt} covers the whole ground set at step {i}")
            t = min(remaining)
            chosen.append(t)
            logger.debug("step %d: %s C_opt=%s t=%d", i, od.describe(), c_opt, t)

            next_objective = removed = None
            next_od = None
            if i < r:
                removed = self._removed_objective(od, t)
                next_objective = tuple(f for f in od.objective if f != removed)
                next_graph = contract(restrict(od.graph, remaining | set(next_objective) | {od.p}), {od.p})
                next_od = OptimizableDigraph(next_graph, t, remaining, next_objective)
                try:
                    next_od.validate()
                except OptimizableDigraphError as exc:
                    raise InvariantViolation(f"Step {i} produced an ill-defined optimizable digraph: {exc}")
                if self.debug and t not in od.objective:
                    self._check_alternative_objective(od, t, remaining, removed)

            if trace is not None:
                trace.steps.append(TraceStep(
                    index=i, graph=od.graph, p=od.p, ground=tuple(sorted(od.ground)),
                    objective=od.objective, c_opt=c_opt, t=t, next_objective=next_objective,
                    removed=removed, candidates=tuple(candidates),
                ))
            if next_od is not None:
                od = next_od

        tree = SpanningTree(tuple(chosen))
        if not is_spanning_tree(root, tree.edges):
            raise InvariantViolation(f"Flag algorithm produced {{{tree}}}, not a spanning tree")
        if trace is not None:
            trace.tree = tree
        return tree, trace

    @staticmethod
    def _removed_objective(od: OptimizableDigraph, t: EdgeId) -> EdgeId:
        """t itself if it is an objective edge, else the greatest objective edge on C(F+p; t)."""
        if t in od.objective:
            return t
        cycle = fundamental_cycle(od.graph, SpanningTree(od.objective + (od.p,)), t)
        on_objective = cycle.support & set(od.objective)
        if not on_objective:
            raise InvariantViolation(f"The fundamental cycle of {t} meets no objective edge")
        return max(on_objective)

    @staticmethod
    def _check_alternative_objective(od: OptimizableDigraph, t: EdgeId, remaining: FrozenSet[EdgeId],
                                     removed: EdgeId) -> None:
        """F' is F minus the greatest f for which F' + t spans the next minor."""
        for f in sorted(od.objective, reverse=True):
            objective = tuple(x for x in od.objective if x != f)
            minor = contract(restrict(od.graph, remaining | set(objective) | {od.p}), {od.p})
            if is_connected(minor) and is_spanning_tree(minor, objective + (t,)):
                if f != removed:
                    raise InvariantViolation(f"Objective edge {removed} removed but {f} is the greatest valid one")
                return
        raise InvariantViolation(f"No objective edge can be removed for infinity edge {t}")

    @staticmethod
    def _check_minimum_lemma(od: OptimizableDigraph) -> None:
        """
        Every cocycle's smallest edge is in F + p, and every cocycle lifts to
        the root graph. The lift may have a smaller edge: in the worked
        example 46 in G/1\\3 lifts to 3-46.
        """
        allowed = set(od.objective) | {od.p}
        for bond in enumerate_cocycles(od.graph):
            smallest = bond.signed.min_element()
            if smallest not in allowed:
                raise InvariantViolation(f"Cocycle {bond.signed} has smallest edge {smallest} outside F+p")
            if od.graph.trace is not None:
                lift_cocycle(od.graph, bond.signed)


def alpha_optimize(g: OrderedDigraph, emit_trace: bool = False, strategy: Strategy = Strategy.COMPARATOR,
                   debug_assertions: Optional[bool] = None) -> Tuple[SpanningTree, Optional[AlgorithmTrace]]:
    return FlagOptimizer(strategy, debug_assertions).run(g, emit_trace)


def lexmin_directed_cocycle(g: OrderedDigraph, p: Optional[EdgeId] = None) -> SignedEdgeSet:
    """Directed cocycle through p with the lexicographically smallest ascending support."""
    p = require_bipolar(g, p)
    return min(directed_cocycles_through(g, p), key=lambda signed: signed.sorted_support)
