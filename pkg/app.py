"""
Main application entry point for the fully optimal spanning tree toolkit.
Orchestrates the three alpha algorithms, the inverse map, the whole
bijection and the verification harness behind one object.
"""

import logging
import sys
from enum import Enum
from typing import Dict, List, Optional, Tuple

from graph.ordered_digraph import EdgeId, OrderedDigraph
from cycles.cocycles import Bond, directed_cocycles_through, enumerate_cocycles
from cycles.signed_sets import SignedEdgeSet
from cycles.spanning_trees import SpanningTree
from orientation.bipolar import Characterization, is_bipolar
from orientation.criterion import alpha_bruteforce
from orientation.inverse import PDirection, invert_alpha
from delcon.bijection import BijectionTable, build_full_bijection
from delcon.solver import DelconSolver, Formulation
from optimizer.flag_algorithm import AlgorithmTrace, FlagOptimizer
from harness.generator import generate_random_bipolar
from harness.verification import VerificationReport, verify_exhaustive, verify_random
from utils.config import SolverConfig, get_config
from utils.errors import NotBipolarError

logger = logging.getLogger(__name__)


class Method(Enum):
    """Algorithm used to compute alpha."""
    BRUTE = "brute"
    DELCON = "delcon"
    OPTIMIZE = "optimize"


class FullyOptimalSolver:
    """
    Front end shared by the CLI and library users.
    Debug assertions follow the given config (default: environment).
    """

    def __init__(self, config: Optional[SolverConfig] = None):
        """Initialize solver."""
        self.config = config or get_config()

    def check(self, g: OrderedDigraph) -> Dict[Characterization, bool]:
        """Bipolarity w.r.t. the smallest edge under each characterization."""
        if not g.edges:
            raise NotBipolarError("A graph without edges has no bipolar orientation")
        return {c: is_bipolar(g, g.min_edge, c) for c in Characterization}

    def alpha(self, g: OrderedDigraph, method: Method = Method.OPTIMIZE,
              formulation: Formulation = Formulation.CYCLE,
              emit_trace: bool = False) -> Tuple[SpanningTree, Optional[AlgorithmTrace]]:
        """Compute alpha; a trace is only produced by the optimizer."""
        if method is Method.BRUTE:
            return alpha_bruteforce(g), None
        if method is Method.DELCON:
            solver = DelconSolver(formulation, cross_check=self.config.debug_assertions)
            return solver.solve(g), None
        optimizer = FlagOptimizer(debug_assertions=self.config.debug_assertions)
        return optimizer.run(g, emit_trace)

    def invert(self, g: OrderedDigraph, tree: SpanningTree,
               direction: PDirection = PDirection.FORWARD) -> OrderedDigraph:
        return invert_alpha(g, tree, direction)

    def bijection(self, g: OrderedDigraph) -> BijectionTable:
        return build_full_bijection(g, debug_assertions=self.config.debug_assertions)

    def cocycles(self, g: OrderedDigraph) -> List[Bond]:
        return enumerate_cocycles(g)

    def directed_cocycles(self, g: OrderedDigraph, p: EdgeId) -> List[SignedEdgeSet]:
        return directed_cocycles_through(g, p)

    def verify(self, corpus: str, max_vertices: int, max_edges: int, orderings: int,
               seed: int, count: int) -> VerificationReport:
        logger.info("verifying %s corpus (vertices<=%d, edges<=%d)", corpus, max_vertices, max_edges)
        if corpus == "exhaustive":
            return verify_exhaustive(max_vertices, max_edges, orderings, seed)
        return verify_random(count, max_vertices, max_edges, seed)

    def generate(self, n_vertices: int, n_edges: int, seed: Optional[int] = None) -> OrderedDigraph:
        return generate_random_bipolar(n_vertices, n_edges, self.config.verify_seed if seed is None else seed)


def main() -> int:
    from interface.cli import main as cli_main
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
