"""Shared graph fixtures."""

import os
import sys

import pytest

# Add repository root to path so the top-level packages import
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from graph.ordered_digraph import build_graph, contract, delete  # noqa: E402
from storage.graph_files import FixtureStore  # noqa: E402


@pytest.fixture
def store():
    return FixtureStore()


@pytest.fixture
def p2():
    return build_graph(["u", "v"], [(1, "u", "v"), (2, "u", "v")])


@pytest.fixture
def t3():
    return build_graph(["u", "v", "w"], [(1, "u", "w"), (2, "u", "v"), (3, "v", "w")])


@pytest.fixture
def example(store):
    return store.load("example")


@pytest.fixture
def example_g2(example):
    return contract(delete(example, {3}), {1})


@pytest.fixture
def example_g3(example_g2):
    return contract(delete(example_g2, {2}), {4})


@pytest.fixture
def single_loop():
    return build_graph(["u"], [(1, "u", "u")])


@pytest.fixture
def single_edge():
    return build_graph(["a", "b"], [(1, "a", "b")])


@pytest.fixture
def two_edge_path():
    return build_graph(["a", "b", "c"], [(1, "a", "b"), (2, "b", "c")])


@pytest.fixture
def k4():
    """Complete graph on four vertices, bipolar from a to d."""
    return build_graph(
        ["a", "b", "c", "d"],
        [(1, "a", "d"), (2, "a", "b"), (3, "b", "c"), (4, "c", "d"), (5, "a", "c"), (6, "b", "d")],
    )
