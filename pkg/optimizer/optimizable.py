"""
Optimizable digraphs: a digraph with an infinity edge p, an acyclic ground
set E and a linearly ordered objective set F such that F + p is a spanning tree.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from graph.ordered_digraph import EdgeId, OrderedDigraph, is_connected, restrict
from cycles.spanning_trees import is_spanning_tree, lex_min_spanning_tree
from orientation.bipolar import is_acyclic, require_bipolar
from utils.errors import OptimizableDigraphError


@dataclass(frozen=True)
class OptimizableDigraph:
    """Edge set of graph is ground | objective; objective ascending (f_2 < ... < f_r)."""
    graph: OrderedDigraph
    p: EdgeId
    ground: FrozenSet[EdgeId]
    objective: Tuple[EdgeId, ...]

    def __post_init__(self):
        object.__setattr__(self, 'ground', frozenset(self.ground))
        object.__setattr__(self, 'objective', tuple(sorted(self.objective)))

    @property
    def r(self) -> int:
        """Size of the spanning tree objective + p."""
        return len(self.objective) + 1

    @property
    def weights(self) -> Dict[EdgeId, int]:
        """w(f_i) = 2^(r-i) for the i-th objective edge, i = 2..r."""
        return {f: 1 << (self.r - i) for i, f in enumerate(self.objective, start=2)}

    def validate(self) -> "OptimizableDigraph":
        if self.p not in self.ground:
            raise OptimizableDigraphError(f"Infinity edge {self.p} is not in the ground set")
        if self.p in self.objective:
            raise OptimizableDigraphError(f"Infinity edge {self.p} belongs to the objective set")
        if self.ground | set(self.objective) != self.graph.edge_set:
            raise OptimizableDigraphError("Ground and objective sets must cover exactly the graph's edges")
        if not is_connected(self.graph):
            raise OptimizableDigraphError("The graph of an optimizable digraph must be connected")
        if not is_acyclic(restrict(self.graph, self.ground)):
            raise OptimizableDigraphError("The ground set contains a directed cycle")
        if not is_spanning_tree(self.graph, self.objective + (self.p,)):
            raise OptimizableDigraphError(
                f"Objective {list(self.objective)} plus infinity edge {self.p} is not a spanning tree"
            )
        return self

    def describe(self) -> str:
        ground = ",".join(str(e) for e in sorted(self.ground))
        objective = ",".join(str(f) for f in self.objective)
        return f"p={self.p} E={{{ground}}} F={{{objective}}}"


def make_optimizable(g: OrderedDigraph) -> OptimizableDigraph:
    """p = min(E), E = all edges, F = lexicographically smallest spanning tree minus p."""
    p = require_bipolar(g)
    tree = lex_min_spanning_tree(g)
    objective = tuple(b for b in tree if b != p)
    return OptimizableDigraph(g, p, g.edge_set, objective).validate()
