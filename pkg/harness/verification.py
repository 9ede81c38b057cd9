"""
Cross-method verification driver.
Every instance is checked against the whole property suite; an error raised
while checking a property is recorded as a failure of that property and the
run continues.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence

import numpy as np

from graph.ordered_digraph import OrderedDigraph, contract, delete, opposite, relabel_edges, reverse_edge
from cycles.cocycles import Bond, enumerate_cocycles, fundamental_cocycle, lift_cocycle
from cycles.spanning_trees import SpanningTree, enumerate_spanning_trees
from orientation.activities import beta_invariant
from orientation.bipolar import (
    Characterization,
    Orientation,
    bipolar_orientations,
    is_bipolar,
    is_bipolar_minor,
    iter_orientations,
    render_bits,
)
from orientation.criterion import (
    alpha_bruteforce,
    fully_optimal_candidates,
    satisfies_alt_characterization,
    satisfies_full_optimality,
    satisfies_greedy_min,
)
from orientation.inverse import PDirection, invert_alpha
from delcon.bijection import BijectionBuilder, build_full_bijection
from delcon.solver import DelconSolver, Formulation, alpha_delcon
from optimizer.flag_algorithm import FlagOptimizer, lexmin_directed_cocycle
from optimizer.optimizable import OptimizableDigraph
from optimizer.ordering import (
    Strategy,
    cocycle_weight,
    compare_cocycles,
    select_by_weight,
    select_multiobjective,
)
from harness.corpus import CorpusGraph, exhaustive_corpus, random_corpus
from harness.generator import fan_digraph
from utils.errors import FullyOptimalError

logger = logging.getLogger(__name__)

# exhaustive scans over every orientation of an unoriented corpus graph
ORIENTATION_SCAN_MAX_EDGES = 6


@dataclass(frozen=True)
class Failure:
    descriptor: str
    property: str
    details: str


@dataclass
class VerificationReport:
    """Failures are empty exactly when the run succeeded."""
    instances_checked: int = 0
    graphs_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    observation_counterexamples: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        merged = VerificationReport(
            instances_checked=self.instances_checked + other.instances_checked,
            graphs_checked=self.graphs_checked + other.graphs_checked,
            failures=sorted(self.failures + other.failures,
                            key=lambda f: (f.property, f.descriptor, f.details)),
            observation_counterexamples=sorted(self.observation_counterexamples
                                               + other.observation_counterexamples),
        )
        return merged

    def render(self) -> str:
        lines = [
            f"instances checked: {self.instances_checked}",
            f"graphs checked: {self.graphs_checked}",
            f"failures: {len(self.failures)}",
        ]
        lines.extend(f"FAIL {f.property} {f.descriptor}: {f.details}" for f in self.failures)
        lines.append(f"observation counterexamples: {len(self.observation_counterexamples)}")
        lines.extend(f"OBSERVATION {item}" for item in self.observation_counterexamples)
        lines.append("status: " + ("ok" if self.ok else "failed"))
        return "\n".join(lines) + "\n"


Check = Callable[[], Optional[str]]


class Verifier:
    """Runs the property suite and accumulates a VerificationReport."""

    def __init__(self, report: Optional[VerificationReport] = None):
        self.report = report or VerificationReport()

    def _property(self, descriptor: str, name: str, check: Check) -> bool:
        try:
            problem = check()
        except FullyOptimalError as exc:
            problem = f"{type(exc).__name__}: {exc}"
        if problem is not None:
            self.report.failures.append(Failure(descriptor, name, problem))
            logger.debug("%s failed on %s: %s", name, descriptor, problem)
            return False
        return True

    # ---- per bipolar digraph ----

    def check_instance(self, g: OrderedDigraph, descriptor: str) -> Optional[SpanningTree]:
        self.report.instances_checked += 1
        found: Dict[str, SpanningTree] = {}

        def uniqueness() -> Optional[str]:
            found['alpha'] = alpha_bruteforce(g)
            return None

        if not self._property(descriptor, "uniqueness", uniqueness):
            return None
        alpha = found['alpha']
        self._property(descriptor, "method_agreement", lambda: self._method_agreement(g, alpha))
        self._property(descriptor, "criterion_equivalence", lambda: self._criterion_equivalence(g))
        self._property(descriptor, "greedy_min", lambda: None if satisfies_greedy_min(g, alpha)
                       else f"{{{alpha}}} is not greedy-minimal")
        self._property(descriptor, "opposite_invariance", lambda: self._opposite_invariance(g, alpha))
        self._property(descriptor, "round_trip", lambda: self._round_trip(g, alpha))
        self._property(descriptor, "delcon_structure", lambda: self._delcon_structure(g, alpha))
        self._property(descriptor, "optimizer_consistency", lambda: self._optimizer_consistency(g, alpha))
        self._property(descriptor, "lexmin_observation", lambda: self._lexmin_observation(g, alpha, descriptor))
        return alpha

    @staticmethod
    def _method_agreement(g: OrderedDigraph, alpha: SpanningTree) -> Optional[str]:
        results = {
            "delcon(cycle)": alpha_delcon(g, Formulation.CYCLE, cross_check=True),
            "delcon(cocycle)": alpha_delcon(g, Formulation.COCYCLE, cross_check=True),
            "optimize": FlagOptimizer(debug_assertions=True).run(g)[0],
        }
        wrong = [f"{name}={{{tree}}}" for name, tree in results.items() if tree != alpha]
        return f"brute={{{alpha}}} but " + ", ".join(wrong) if wrong else None

    @staticmethod
    def _criterion_equivalence(g: OrderedDigraph) -> Optional[str]:
        p = g.min_edge
        for tree in enumerate_spanning_trees(g):
            direct = satisfies_full_optimality(g, p, tree)
            composed = satisfies_alt_characterization(g, p, tree)
            if direct != composed:
                return f"{{{tree}}}: criterion {direct}, composition form {composed}"
        return None

    @staticmethod
    def _opposite_invariance(g: OrderedDigraph, alpha: SpanningTree) -> Optional[str]:
        reversed_alpha = alpha_bruteforce(opposite(g))
        return None if reversed_alpha == alpha else f"opposite digraph gives {{{reversed_alpha}}}"

    @staticmethod
    def _round_trip(g: OrderedDigraph, alpha: SpanningTree) -> Optional[str]:
        if invert_alpha(g, alpha, PDirection.FORWARD) != g:
            return f"inverting {{{alpha}}} forward does not give back the digraph"
        if invert_alpha(g, alpha, PDirection.REVERSE) != opposite(g):
            return f"inverting {{{alpha}}} reversed does not give the opposite digraph"
        return None

    @staticmethod
    def _delcon_structure(g: OrderedDigraph, alpha: SpanningTree) -> Optional[str]:
        if len(g.edges) < 2:
            return None
        p, omega = g.min_edge, g.max_edge
        deleted, contracted = delete(g, {omega}), contract(g, {omega})
        deletion_ok, contraction_ok = is_bipolar_minor(deleted, p), is_bipolar_minor(contracted, p)

        if omega in alpha:
            if not contraction_ok:
                return f"edge {omega} in alpha but G/omega is not bipolar"
            if alpha_bruteforce(contracted) != alpha.without_edge(omega):
                return f"alpha minus {omega} differs from alpha(G/omega)"
        else:
            if not deletion_ok:
                return f"edge {omega} not in alpha but G\\omega is not bipolar"
            if alpha_bruteforce(deleted) != alpha:
                return "alpha differs from alpha(G\\omega)"

        flipped = reverse_edge(g, omega)
        flipped_ok = is_bipolar(flipped, p)
        if flipped_ok != (deletion_ok and contraction_ok):
            return (f"-omega G bipolar: {flipped_ok}, minors bipolar: "
                    f"deletion {deletion_ok}, contraction {contraction_ok}")
        if flipped_ok:
            pair = {alpha, alpha_bruteforce(flipped)}
            expected = {alpha_bruteforce(deleted), alpha_bruteforce(contracted).with_edge(omega)}
            if pair != expected:
                return "alpha(G) and alpha(-omega G) differ from the minors' trees"
        return None

    @staticmethod
    def _optimizer_consistency(g: OrderedDigraph, alpha: SpanningTree) -> Optional[str]:
        optimizer = FlagOptimizer(Strategy.COMPARATOR, debug_assertions=True)
        _, trace = optimizer.run(g, emit_trace=True)
        r = len(g.vertices) - 1
        if optimizer.digraphs_used != r - 1:
            return f"{optimizer.digraphs_used} optimizable digraphs used, expected {r - 1}"
        sequence = [trace.p] + trace.t_sequence
        for k, step in enumerate(trace.steps):
            od = OptimizableDigraph(step.graph, step.p, frozenset(step.ground), step.objective)
            for first, second in itertools.combinations(step.candidates, 2):
                by_comparator = compare_cocycles(od, first, second).value
                by_weight = int(np.sign(cocycle_weight(od, first) - cocycle_weight(od, second)))
                if by_comparator != by_weight:
                    return f"step {step.index}: comparator and weight disagree on {first} vs {second}"
            for select in (select_by_weight, select_multiobjective):
                if select(od, step.candidates) != step.c_opt:
                    return f"step {step.index}: {select.__name__} picks another optimal cocycle"
            induced = lift_cocycle(step.graph, step.c_opt) if step.graph.trace else step.c_opt
            expected = fundamental_cocycle(g, alpha, sequence[k])
            if induced != expected:
                return f"step {step.index}: C_opt {step.c_opt} induces {induced}, expected {expected}"
        return None

    def _lexmin_observation(self, g: OrderedDigraph, alpha: SpanningTree, descriptor: str) -> Optional[str]:
        first = fundamental_cocycle(g, alpha, g.min_edge)
        smallest = lexmin_directed_cocycle(g)
        if first != smallest:
            item = f"{descriptor}: C*(alpha;p)={first}, lexicographically smallest={smallest}"
            logger.warning("first-cocycle observation fails: %s", item)
            self.report.observation_counterexamples.append(item)
        return None

    # ---- per edge-ordered graph ----

    def check_graph(self, corpus_graph: CorpusGraph) -> None:
        g, descriptor = corpus_graph.graph, corpus_graph.descriptor
        if corpus_graph.oriented:
            self.check_instance(g, descriptor)
            return
        self.report.graphs_checked += 1
        expected: Dict[Orientation, SpanningTree] = {}
        for bits, oriented in bipolar_orientations(g):
            alpha = self.check_instance(oriented, f"{descriptor} {render_bits(bits)}")
            if alpha is not None:
                expected[bits] = alpha
        self._property(descriptor, "counting", lambda: self._counting(g))
        self._property(descriptor, "bijection", lambda: self._bijection(g, expected))
        self._property(descriptor, "p_independence", lambda: self._p_independence(g))
        self._property(descriptor, "cocycle_uniqueness", lambda: self._cocycle_uniqueness(g))
        if len(g.edges) <= ORIENTATION_SCAN_MAX_EDGES:
            self._property(descriptor, "criterion_forces_bipolarity", lambda: self._forcing(g))
            self._property(descriptor, "characterization_agreement", lambda: self._agreement(g))

    @staticmethod
    def _agreement(g: OrderedDigraph) -> Optional[str]:
        p = g.min_edge
        for bits, oriented in iter_orientations(g, fix_min=False):
            answers = {c: is_bipolar(oriented, p, c) for c in Characterization}
            if len(set(answers.values())) > 1:
                verdicts = ", ".join(f"{c.value}={answer}" for c, answer in answers.items())
                return f"{render_bits(bits)}: {verdicts}"
        return None

    @staticmethod
    def _cocycle_uniqueness(g: OrderedDigraph) -> Optional[str]:
        """A spanning tree meets distinct bonds in distinct edge sets."""
        bonds = enumerate_cocycles(g)
        for tree in enumerate_spanning_trees(g):
            seen: Dict[FrozenSet[int], Bond] = {}
            for bond in bonds:
                met = bond.support & frozenset(tree.edges)
                if met in seen:
                    return (f"bonds {{{seen[met].signed}}} and {{{bond.signed}}} "
                            f"both meet tree {{{tree}}} in {sorted(met)}")
                seen[met] = bond
        return None

    @staticmethod
    def _counting(g: OrderedDigraph) -> Optional[str]:
        beta = beta_invariant(g)
        fixed = sum(1 for _ in bipolar_orientations(g, fix_min=True))
        total = sum(1 for _ in bipolar_orientations(g, fix_min=False))
        if fixed != beta or total != 2 * beta:
            return f"beta={beta}, bipolar orientations: {fixed} with p fixed, {total} in all"
        return None

    @staticmethod
    def _bijection(g: OrderedDigraph, expected: Dict[Orientation, SpanningTree]) -> Optional[str]:
        table = build_full_bijection(g)
        if set(table.entries) != set(bipolar_orientations_bits(g)):
            return "table domain differs from the bipolar orientations"
        for bits, alpha in expected.items():
            if table.entries[bits] != alpha:
                return f"{render_bits(bits)} maps to {{{table.entries[bits]}}}, brute force gives {{{alpha}}}"
        return None

    @staticmethod
    def _p_independence(g: OrderedDigraph) -> Optional[str]:
        beta = beta_invariant(g)
        for edge in g.edges:
            if edge.is_loop:
                continue
            rest = [e for e in g.edge_ids if e != edge.id]
            mapping = {edge.id: 1, **{e: k for k, e in enumerate(rest, start=2)}}
            count = sum(1 for _ in bipolar_orientations(relabel_edges(g, mapping)))
            if count != beta:
                return f"edge {edge.id} first: {count} bipolar orientations, beta={beta}"
        return None

    @staticmethod
    def _forcing(g: OrderedDigraph) -> Optional[str]:
        p = g.min_edge
        for bits, oriented in iter_orientations(g):
            if is_bipolar(oriented, p):
                continue
            passing = fully_optimal_candidates(oriented)
            if passing:
                return f"non-bipolar {render_bits(bits)} has fully optimal candidate {{{passing[0]}}}"
        return None


def bipolar_orientations_bits(g: OrderedDigraph) -> List[Orientation]:
    return [bits for bits, _ in bipolar_orientations(g)]


def run_verification(corpus: Iterable[CorpusGraph]) -> VerificationReport:
    verifier = Verifier()
    for corpus_graph in corpus:
        verifier.check_graph(corpus_graph)
    report = verifier.report
    logger.info("verified %d instances on %d graphs: %d failures, %d observation counterexamples",
                report.instances_checked, report.graphs_checked, len(report.failures),
                len(report.observation_counterexamples))
    return report


def verify_exhaustive(max_vertices: int, max_edges: int, orderings: int, seed: int) -> VerificationReport:
    return run_verification(exhaustive_corpus(max_vertices, max_edges, orderings, seed))


def verify_random(count: int, max_vertices: int, max_edges: int, seed: int) -> VerificationReport:
    return run_verification(random_corpus(count, max_vertices, max_edges, seed))


@dataclass
class ComplexityProfile:
    """
    Recursion counters on fan_digraph(k) for each k, with fitted log2 slopes
    against k. Each extra middle vertex adds one edge on which both minors
    stay bipolar.
    """
    sizes: List[int]
    edge_counts: List[int]
    delcon_visits: List[int]
    bijection_visits: List[int]
    orientation_steps: List[int]

    def slope(self, counts: Sequence[int], divide_by_size: bool = False) -> float:
        values = [c / k if divide_by_size else c for c, k in zip(counts, self.sizes)]
        return float(np.polyfit(self.sizes, np.log2(values), 1)[0])

    @property
    def slopes(self) -> Dict[str, float]:
        return {
            "delcon": self.slope(self.delcon_visits),
            "bijection": self.slope(self.orientation_steps),
            "bijection_per_size": self.slope(self.orientation_steps, divide_by_size=True),
        }


def complexity_profile(sizes: Iterable[int] = range(4, 10)) -> ComplexityProfile:
    """Counts recursion nodes of both deletion/contraction algorithms on fans."""
    profile = ComplexityProfile([], [], [], [], [])
    for k in sizes:
        g = fan_digraph(k)
        solver = DelconSolver(cross_check=False)
        solver.solve(g)
        builder = BijectionBuilder(g, debug_assertions=False)
        builder.build()
        profile.sizes.append(k)
        profile.edge_counts.append(len(g.edges))
        profile.delcon_visits.append(solver.node_visits)
        profile.bijection_visits.append(builder.node_visits)
        profile.orientation_steps.append(builder.orientation_steps)
        logger.debug("fan %d (%d edges): delcon %d, bijection %d nodes / %d steps", k, len(g.edges),
                     solver.node_visits, builder.node_visits, builder.orientation_steps)
    return profile
