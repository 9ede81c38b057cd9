import logging
import re
from pathlib import Path

import pytest

import utils.config
from app import FullyOptimalSolver, Method
from cycles.spanning_trees import SpanningTree
from graph.ordered_digraph import build_graph
from orientation.bipolar import Characterization
import setup_env as env_bootstrap
from setup_env import setup_env
from utils.config import SolverConfig, get_config, resolve_debug
from utils.errors import (
    FullyOptimalError,
    GraphError,
    NotBipolarError,
    TheoremViolation,
    UniquenessViolation,
)
from utils.logging_setup import configure_logging


def test_config_from_environment(monkeypatch):
    monkeypatch.setenv("ALPHA_DEBUG_ASSERTIONS", "off")
    monkeypatch.setenv("ALPHA_MAX_VERTICES", "7")
    monkeypatch.setenv("ALPHA_LOG_LEVEL", "debug")
    monkeypatch.setenv("ALPHA_VERIFY_SEED", "42")
    config = SolverConfig.from_env()
    assert config == SolverConfig(debug_assertions=False, max_vertices=7, log_level="DEBUG", verify_seed=42)


def test_defaults(monkeypatch):
    for name in ("ALPHA_DEBUG_ASSERTIONS", "ALPHA_MAX_VERTICES", "ALPHA_LOG_LEVEL", "ALPHA_VERIFY_SEED"):
        monkeypatch.delenv(name, raising=False)
    assert SolverConfig.from_env() == SolverConfig()


def test_bad_integer(monkeypatch):
    monkeypatch.setenv("ALPHA_MAX_VERTICES", "many")
    with pytest.raises(ValueError):
        SolverConfig.from_env()


def test_global_config_and_debug_flag(monkeypatch):
    monkeypatch.setattr(utils.config, "_config", SolverConfig(debug_assertions=False))
    assert get_config().debug_assertions is False
    assert resolve_debug(None) is False
    assert resolve_debug(True) is True


def test_error_hierarchy():
    assert issubclass(GraphError, ValueError)
    assert issubclass(NotBipolarError, FullyOptimalError)
    assert issubclass(UniquenessViolation, TheoremViolation)
    assert not issubclass(TheoremViolation, ValueError)


def test_configure_logging_is_idempotent():
    root = logging.getLogger()
    configure_logging("info")
    configure_logging("debug")
    handlers = [h for h in root.handlers if getattr(h, '_alpha_handler', False)]
    assert len(handlers) == 1
    assert root.level == logging.DEBUG
    root.removeHandler(handlers[0])
    root.setLevel(logging.WARNING)


def test_setup_env(tmp_path, capsys):
    example = tmp_path / "env.example"
    target = tmp_path / ".env"
    assert not setup_env(str(target), str(example))
    example.write_text("ALPHA_MAX_VERTICES=9\n")
    assert setup_env(str(target), str(example))
    assert target.read_text() == "ALPHA_MAX_VERTICES=9\n"
    assert not setup_env(str(target), str(example))


def test_env_example_declares_the_documented_keys():
    text = (Path(__file__).resolve().parent.parent / "env.example").read_text()
    declared = set(re.findall(r"^#?\s*(ALPHA_[A-Z_]+)=", text, re.MULTILINE))
    documented = set(re.findall(r"ALPHA_[A-Z_]+", env_bootstrap.__doc__))
    assert declared == documented == {
        "ALPHA_DEBUG_ASSERTIONS", "ALPHA_MAX_VERTICES", "ALPHA_LOG_LEVEL",
        "ALPHA_VERIFY_SEED", "ALPHA_FIXTURE_DIR",
    }


def test_solver_front_end(example, t3):
    solver = FullyOptimalSolver(SolverConfig(debug_assertions=True))
    for method in Method:
        tree, trace = solver.alpha(example, method)
        assert tree == SpanningTree.of([1, 4, 5, 7])
        assert trace is None
    assert solver.alpha(example, Method.OPTIMIZE, emit_trace=True)[1].t_sequence == [4, 5, 7]
    assert solver.check(t3) == {c: True for c in Characterization}
    assert solver.invert(t3, SpanningTree.of([1, 3])) == t3
    assert len(solver.bijection(t3)) == 1
    assert len(solver.cocycles(t3)) == 3
    assert len(solver.directed_cocycles(t3, 1)) == 2
    assert solver.generate(4, 5, seed=1) == solver.generate(4, 5, seed=1)
    with pytest.raises(NotBipolarError):
        solver.check(build_graph(["u"], []))
