"""
Reconstruction of the worked example digraph from the facts known about it:
its directed cocycles through edge 1, its smallest spanning tree, two
fundamental cycles, its fully optimal spanning tree and two of that tree's
fundamental cocycles. Every digraph meeting all of them is a valid fixture.
"""

import itertools
import logging
from typing import FrozenSet, List, Sequence, Tuple

from graph.ordered_digraph import OrderedDigraph, build_graph, contract, delete, is_connected
from cycles.cocycles import directed_cocycles_through, fundamental_cocycle, fundamental_cycle
from cycles.signed_sets import SignedEdgeSet
from cycles.spanning_trees import SpanningTree, is_spanning_tree, lex_min_spanning_tree
from orientation.bipolar import is_bipolar
from orientation.criterion import alpha_bruteforce
from utils.errors import FullyOptimalError

logger = logging.getLogger(__name__)

SOURCE, SINK = "s", "t"
MIDDLE = ("x", "y", "z")
EDGES = tuple(range(1, 9))

DIRECTED_COCYCLES = [frozenset(c) for c in ({1, 2, 3}, {1, 2, 4, 6}, {1, 3, 5, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7})]
LEX_MIN_TREE = SpanningTree((1, 2, 3, 6))
ALPHA = SpanningTree((1, 4, 5, 7))
COCYCLE_OF_4 = SignedEdgeSet.of(positive=[4, 6], negative=[3])
COCYCLE_OF_5 = SignedEdgeSet.of(positive=[5, 8], negative=[2])


def example_constraint_violations(g: OrderedDigraph) -> List[str]:
    """Empty iff g satisfies every known fact about the worked example."""
    if len(g.vertices) != 5 or g.edge_ids != EDGES:
        return ["needs 5 vertices and edges 1..8"]
    if not is_connected(g) or not is_bipolar(g, 1):
        return ["not bipolar w.r.t. edge 1"]
    problems = []
    supports = sorted(tuple(sorted(c.support)) for c in directed_cocycles_through(g, 1))
    if supports != sorted(tuple(sorted(c)) for c in DIRECTED_COCYCLES):
        problems.append(f"directed cocycles through 1 are {supports}")
    if lex_min_spanning_tree(g) != LEX_MIN_TREE:
        problems.append(f"smallest spanning tree is {{{lex_min_spanning_tree(g)}}}")
        return problems
    if fundamental_cycle(g, LEX_MIN_TREE, 4).support != {1, 3, 4}:
        problems.append("cycle of 4 w.r.t. 1236 is not 134")
    minor = contract(delete(g, {3}), {1})
    if not is_spanning_tree(minor, (2, 4, 6)) or fundamental_cycle(minor, SpanningTree((2, 4, 6)), 5).support != {2, 5}:
        problems.append("cycle of 5 w.r.t. 246 in G/1\\3 is not 25")
    try:
        alpha = alpha_bruteforce(g)
    except FullyOptimalError as exc:
        return problems + [str(exc)]
    if alpha != ALPHA:
        problems.append(f"alpha is {{{alpha}}}")
        return problems
    if fundamental_cocycle(g, ALPHA, 4) != COCYCLE_OF_4:
        problems.append(f"C*(1457;4) is {fundamental_cocycle(g, ALPHA, 4)}")
    if fundamental_cocycle(g, ALPHA, 5) != COCYCLE_OF_5:
        problems.append(f"C*(1457;5) is {fundamental_cocycle(g, ALPHA, 5)}")
    return problems


def _star_pairs() -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """(edges at the source, edges at the sink): two listed cocycles meeting only in edge 1."""
    return [(a, b) for a, b in itertools.permutations(DIRECTED_COCYCLES, 2) if a & b == {1}]


def _every_inner_vertex_balanced(arcs: Sequence[Tuple[str, str]]) -> bool:
    tails = {tail for tail, _ in arcs}
    heads = {head for _, head in arcs}
    return all(v in tails and v in heads for v in MIDDLE)


def canonical_form(g: OrderedDigraph) -> Tuple[Tuple[int, str, str], ...]:
    """Smallest edge list over the renamings of the three middle vertices."""
    forms = []
    for perm in itertools.permutations(MIDDLE):
        rename = dict(zip(MIDDLE, perm))
        rename.update({SOURCE: SOURCE, SINK: SINK})
        forms.append(tuple((e.id, rename.get(e.tail, e.tail), rename.get(e.head, e.head)) for e in g.edges))
    return min(forms)


def search_example_digraphs() -> List[OrderedDigraph]:
    """All digraphs (up to renaming the middle vertices) meeting the example's facts."""
    found = {}
    inner_pairs = list(itertools.permutations(MIDDLE, 2))
    for source_star, sink_star in _star_pairs():
        out_edges = sorted(source_star - {1})
        in_edges = sorted(sink_star - {1})
        inner = sorted(set(EDGES) - source_star - sink_star)
        for heads in itertools.product(MIDDLE, repeat=len(out_edges)):
            for tails in itertools.product(MIDDLE, repeat=len(in_edges)):
                for links in itertools.product(inner_pairs, repeat=len(inner)):
                    arcs = {1: (SOURCE, SINK)}
                    arcs.update({e: (SOURCE, v) for e, v in zip(out_edges, heads)})
                    arcs.update({e: (v, SINK) for e, v in zip(in_edges, tails)})
                    arcs.update(dict(zip(inner, links)))
                    if not _every_inner_vertex_balanced(list(arcs.values())):
                        continue
                    g = build_graph((SOURCE, SINK) + MIDDLE, [(e, *arcs[e]) for e in EDGES])
                    if example_constraint_violations(g):
                        continue
                    found.setdefault(canonical_form(g), g)
    logger.info("example search: %d digraphs satisfy every constraint", len(found))
    return [found[key] for key in sorted(found)]
