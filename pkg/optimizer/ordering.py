"""
Linear ordering of the signed cocycles through the infinity edge.
The comparator is primary; the weight function and the sequential
multiobjective filter compute the same order and serve as cross-checks.
"""

import logging
from enum import Enum
from functools import cmp_to_key
from typing import List, Sequence

from cycles.signed_sets import SignedEdgeSet
from optimizer.optimizable import OptimizableDigraph
from utils.errors import InvariantViolation, OptimizableDigraphError

logger = logging.getLogger(__name__)


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Strategy(Enum):
    """How the optimal cocycle is selected."""
    COMPARATOR = "comparator"
    WEIGHT = "weight"
    MULTIOBJECTIVE = "multiobjective"


def _require_p(od: OptimizableDigraph, signed: SignedEdgeSet) -> None:
    if od.p not in signed:
        raise OptimizableDigraphError(f"Infinity edge {od.p} is not in {signed}")


def cocycle_weight(od: OptimizableDigraph, signed: SignedEdgeSet) -> int:
    """Sum of +w(f) over positive and -w(f) over negative objective edges; exact."""
    _require_p(od, signed)
    return sum(signed.sign(f) * w for f, w in od.weights.items())


def compare_cocycles(od: OptimizableDigraph, first: SignedEdgeSet, second: SignedEdgeSet) -> Comparison:
    """
    Decided by the smallest objective edge f in the symmetric difference, or
    common with opposite signs: first > second if f is positive in first or
    negative in second.
    """
    _require_p(od, first)
    _require_p(od, second)
    if first == second:
        return Comparison.EQUAL
    for f in od.objective:
        in_first, in_second = f in first, f in second
        if in_first and in_second:
            if first.sign(f) == second.sign(f):
                continue
            logger.warning("cocycles %s and %s have opposite signs on objective edge %d",
                           first, second, f)
        elif not in_first and not in_second:
            continue
        if first.sign(f) > 0 or second.sign(f) < 0:
            return Comparison.GREATER
        return Comparison.LESS
    raise InvariantViolation(f"Distinct cocycles {first} and {second} agree on the whole objective set")


def sort_descending(od: OptimizableDigraph, cocycles: Sequence[SignedEdgeSet]) -> List[SignedEdgeSet]:
    key = cmp_to_key(lambda a, b: compare_cocycles(od, a, b).value)
    return sorted(cocycles, key=key, reverse=True)


def select_by_comparator(od: OptimizableDigraph, candidates: Sequence[SignedEdgeSet]) -> SignedEdgeSet:
    return sort_descending(od, candidates)[0]


def select_by_weight(od: OptimizableDigraph, candidates: Sequence[SignedEdgeSet]) -> SignedEdgeSet:
    best = max(cocycle_weight(od, c) for c in candidates)
    winners = [c for c in candidates if cocycle_weight(od, c) == best]
    if len(winners) != 1:
        raise InvariantViolation(f"{len(winners)} candidate cocycles share the maximal weight {best}")
    return winners[0]


def select_multiobjective(od: OptimizableDigraph, candidates: Sequence[SignedEdgeSet]) -> SignedEdgeSet:
    """Keep the best sign on f_2 (+ before absent before -), then on f_3, and so on."""
    remaining = list(candidates)
    for f in od.objective:
        best = max(c.sign(f) for c in remaining)
        remaining = [c for c in remaining if c.sign(f) == best]
    if len(remaining) != 1:
        raise InvariantViolation(f"{len(remaining)} candidate cocycles remain after every objective")
    return remaining[0]


SELECTORS = {
    Strategy.COMPARATOR: select_by_comparator,
    Strategy.WEIGHT: select_by_weight,
    Strategy.MULTIOBJECTIVE: select_multiobjective,
}
