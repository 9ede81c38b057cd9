"""
Verification corpora.
The exhaustive corpus holds every connected loopless multigraph (parallel
multiplicity at most 2) within the vertex and edge bounds, one per
isomorphism class, each under the identity edge order and a number of
random edge orders. The random corpus holds seeded generated bipolar digraphs.
"""

import itertools
import logging
import random
import string
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from graph.ordered_digraph import OrderedDigraph, build_graph, relabel_edges
from harness.generator import generate_random_bipolar, is_feasible
from utils.errors import GeneratorError

logger = logging.getLogger(__name__)

MAX_MULTIPLICITY = 2


@dataclass(frozen=True)
class CorpusGraph:
    """An edge-ordered graph; stored directions are arbitrary unless oriented."""
    descriptor: str
    graph: OrderedDigraph
    oriented: bool = False


def connected_multigraphs(max_vertices: int, max_edges: int) -> Iterator[nx.MultiGraph]:
    """One representative per isomorphism class, bucketed by degree sequence."""
    for n in range(2, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        representatives: Dict[Tuple[int, ...], List[nx.MultiGraph]] = {}
        for multiplicities in itertools.product(range(MAX_MULTIPLICITY + 1), repeat=len(pairs)):
            size = sum(multiplicities)
            if size < n - 1 or size > max_edges:
                continue
            graph = nx.MultiGraph()
            graph.add_nodes_from(range(n))
            for (a, b), count in zip(pairs, multiplicities):
                for _ in range(count):
                    graph.add_edge(a, b)
            if not nx.is_connected(graph):
                continue
            degrees = tuple(sorted(d for _, d in graph.degree()))
            bucket = representatives.setdefault(degrees, [])
            if any(nx.is_isomorphic(graph, seen) for seen in bucket):
                continue
            bucket.append(graph)
            yield graph


def to_ordered(graph: nx.MultiGraph) -> OrderedDigraph:
    """Edges numbered 1..m in sorted endpoint order, stored from smaller to larger label."""
    names = {v: string.ascii_lowercase[i] for i, v in enumerate(sorted(graph.nodes))}
    arcs = sorted((min(a, b), max(a, b)) for a, b in graph.edges())
    return build_graph(names.values(), [(k, names[a], names[b]) for k, (a, b) in enumerate(arcs, start=1)])


def edge_orders(g: OrderedDigraph, orderings: int, rng: random.Random) -> List[Dict[int, int]]:
    """The identity order plus up to `orderings` distinct random ones."""
    ids = list(g.edge_ids)
    seen = {tuple(ids)}
    orders = [{e: e for e in ids}]
    for _ in range(orderings):
        shuffled = ids[:]
        rng.shuffle(shuffled)
        if tuple(shuffled) in seen:
            continue
        seen.add(tuple(shuffled))
        orders.append({old: new for old, new in zip(ids, shuffled)})
    return orders


def exhaustive_corpus(max_vertices: int, max_edges: int, orderings: int, seed: int) -> Iterator[CorpusGraph]:
    rng = random.Random(seed)
    count = 0
    for graph in connected_multigraphs(max_vertices, max_edges):
        base = to_ordered(graph)
        for k, order in enumerate(edge_orders(base, orderings, rng)):
            count += 1
            ordered = relabel_edges(base, order)
            yield CorpusGraph(f"{ordered} order#{k}", ordered)
    logger.debug("exhaustive corpus: %d edge-ordered graphs", count)


def random_corpus(count: int, max_vertices: int, max_edges: int, seed: int) -> Iterator[CorpusGraph]:
    """Generated bipolar digraphs with 2..max_vertices vertices."""
    if max_edges < 1:
        raise GeneratorError("The random corpus needs at least one edge per instance")
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n_vertices = rng.randint(2, max(2, max_vertices))
        low = 1 if n_vertices == 2 else n_vertices
        if low > max_edges:
            continue
        n_edges = rng.randint(low, max_edges)
        if not is_feasible(n_vertices, n_edges):
            continue
        instance_seed = rng.randrange(2 ** 31)
        g = generate_random_bipolar(n_vertices, n_edges, instance_seed)
        produced += 1
        yield CorpusGraph(f"random(n={n_vertices},m={n_edges},seed={instance_seed})", g, oriented=True)
