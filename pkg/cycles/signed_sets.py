"""
Signed edge subsets: an edge subset split into a positive and a negative part.
Signed cycles and signed cocycles are both represented this way.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from graph.ordered_digraph import EdgeId


def _render_ids(ids: Iterable[EdgeId]) -> str:
    return "{" + ",".join(str(e) for e in sorted(ids)) + "}"


@dataclass(frozen=True)
class SignedEdgeSet:
    """Pair (positive, negative) of disjoint edge sets."""
    positive: FrozenSet[EdgeId]
    negative: FrozenSet[EdgeId] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'positive', frozenset(self.positive))
        object.__setattr__(self, 'negative', frozenset(self.negative))
        if self.positive & self.negative:
            raise ValueError(
                f"Positive and negative parts overlap on {sorted(self.positive & self.negative)}"
            )

    @classmethod
    def of(cls, positive: Iterable[EdgeId] = (), negative: Iterable[EdgeId] = ()) -> "SignedEdgeSet":
        return cls(frozenset(positive), frozenset(negative))

    @property
    def support(self) -> FrozenSet[EdgeId]:
        return self.positive | self.negative

    @property
    def sorted_support(self) -> Tuple[EdgeId, ...]:
        return tuple(sorted(self.support))

    def sign(self, e: EdgeId) -> int:
        """+1, -1, or 0 when e is not in the set."""
        if e in self.positive:
            return 1
        if e in self.negative:
            return -1
        return 0

    def __contains__(self, e: EdgeId) -> bool:
        return e in self.positive or e in self.negative

    def __len__(self) -> int:
        return len(self.positive) + len(self.negative)

    def __neg__(self) -> "SignedEdgeSet":
        return SignedEdgeSet(self.negative, self.positive)

    def negated(self) -> "SignedEdgeSet":
        return -self

    def oriented_positive_on(self, e: EdgeId) -> "SignedEdgeSet":
        """The one of self, -self in which e is positive."""
        if e not in self:
            raise ValueError(f"Edge {e} is not in {self}")
        return self if e in self.positive else -self

    def min_element(self) -> EdgeId:
        return min(self.support)

    def is_positive(self) -> bool:
        return not self.negative

    def restricted_to(self, edge_ids: Iterable[EdgeId]) -> "SignedEdgeSet":
        keep = frozenset(edge_ids)
        return SignedEdgeSet(self.positive & keep, self.negative & keep)

    def without(self, edge_ids: Iterable[EdgeId]) -> "SignedEdgeSet":
        drop = frozenset(edge_ids)
        return SignedEdgeSet(self.positive - drop, self.negative - drop)

    def __str__(self) -> str:
        return f"+{_render_ids(self.positive)}/-{_render_ids(self.negative)}"


def compose(first: SignedEdgeSet, second: SignedEdgeSet) -> SignedEdgeSet:
    """C o D: union of supports, signs of C win on the overlap."""
    only_second = second.support - first.support
    return SignedEdgeSet(
        first.positive | (second.positive & only_second),
        first.negative | (second.negative & only_second),
    )


def compose_all(parts: Iterable[SignedEdgeSet]) -> Optional[SignedEdgeSet]:
    result: Optional[SignedEdgeSet] = None
    for part in parts:
        result = part if result is None else compose(result, part)
    return result


def check_orthogonality(first: SignedEdgeSet, second: SignedEdgeSet) -> bool:
    """
    Orthogonality of a (composition of) cycle(s) and a cocycle: disjoint,
    or meeting in both a same-sign and an opposite-sign element.
    """
    if not (first.support & second.support):
        return True
    same = (first.positive & second.positive) | (first.negative & second.negative)
    opposite = (first.positive & second.negative) | (first.negative & second.positive)
    return bool(same) and bool(opposite)
