"""
Seeded random bipolar digraphs.
A random vertex order v_1..v_n is drawn; edge 1 joins v_1 to v_n and every
other edge goes from an earlier to a later vertex, so the digraph is acyclic
with v_1 the only source and v_n the only sink once every inner vertex has
an in-edge and an out-edge.
"""

import logging
import random
from typing import List, Tuple

from graph.ordered_digraph import OrderedDigraph, build_graph
from orientation.bipolar import Characterization, is_bipolar
from utils.errors import GeneratorError

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 20


def is_feasible(n_vertices: int, n_edges: int) -> bool:
    if n_vertices < 2:
        return False
    if n_vertices == 2:
        return n_edges >= 1
    return n_edges >= n_vertices


def _cover(rng: random.Random, n: int, strict: bool) -> List[Tuple[int, int]]:
    """Arcs on positions 0..n-1 giving every inner position an in-edge and an out-edge."""
    if strict:
        return [(i, i + 1) for i in range(n - 1)]
    arcs: List[Tuple[int, int]] = []
    has_out = {0}
    for j in range(1, n - 1):
        lacking = [i for i in range(1, j) if i not in has_out]
        i = rng.choice(lacking) if lacking and rng.random() < 0.75 else rng.randrange(j)
        arcs.append((i, j))
        has_out.add(i)
    for i in range(1, n - 1):
        if i not in has_out:
            arcs.append((i, rng.randrange(i + 1, n)))
            has_out.add(i)
    return arcs


def generate_random_bipolar(n_vertices: int, n_edges: int, seed: int) -> OrderedDigraph:
    """Deterministic for a fixed seed; the result is bipolar w.r.t. edge 1."""
    if not is_feasible(n_vertices, n_edges):
        raise GeneratorError(f"No bipolar digraph generated for {n_vertices} vertices and {n_edges} edges")
    rng = random.Random(seed)
    labels = [f"v{k}" for k in range(1, n_vertices + 1)]
    order = labels[:]
    rng.shuffle(order)
    n = n_vertices

    arcs: List[Tuple[int, int]] = []
    for attempt in range(MAX_ATTEMPTS):
        arcs = _cover(rng, n, strict=attempt == MAX_ATTEMPTS - 1)
        if len(arcs) + 1 <= n_edges:
            break
        logger.debug("cover used %d edges, budget %d; retrying", len(arcs) + 1, n_edges)
    else:
        logger.warning("generator retries exhausted for %d vertices, %d edges", n_vertices, n_edges)
        raise GeneratorError(f"Could not cover {n_vertices} vertices with {n_edges} edges")

    while len(arcs) + 1 < n_edges:
        i, j = sorted(rng.sample(range(n), 2))
        arcs.append((i, j))

    ids = list(range(2, n_edges + 1))
    rng.shuffle(ids)
    edge_list = [(1, order[0], order[-1])]
    edge_list.extend((edge_id, order[i], order[j]) for edge_id, (i, j) in zip(ids, arcs))
    g = build_graph(labels, edge_list)

    for characterization in Characterization:
        if not is_bipolar(g, 1, characterization):
            raise GeneratorError(
                f"Generated digraph fails the {characterization.value} bipolarity test (seed {seed})"
            )
    return g


def fan_digraph(k: int) -> OrderedDigraph:
    """
    s -> x_i -> t for i = 1..k, the path x_1 -> ... -> x_k and edge 1 = s -> t.
    Path edges come last in the order, so each of them leaves both minors
    bipolar when it is the greatest edge; every other step is forced.
    """
    if k < 1:
        raise GeneratorError(f"A fan needs at least one middle vertex, got {k}")
    middle = [f"x{i}" for i in range(1, k + 1)]
    edge_list = [(1, "s", "t")]
    edge_list.extend((1 + i, "s", x) for i, x in enumerate(middle, start=1))
    edge_list.extend((k + 1 + i, x, "t") for i, x in enumerate(middle, start=1))
    edge_list.extend((2 * k + 1 + i, middle[i - 1], middle[i]) for i in range(1, k))
    return build_graph(["s", "t"] + middle, edge_list)
