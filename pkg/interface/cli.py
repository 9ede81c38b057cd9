"""
Command-line interface.
Results go to stdout, logs to stderr. Library errors exit with status 2,
failed verification with status 1.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional, Sequence

from app import FullyOptimalSolver, Method
from cycles.spanning_trees import SpanningTree
from delcon.solver import Formulation
from orientation.inverse import PDirection
from storage.graph_files import format_graph, parse_graph_file
from storage.rendering import render_bond, render_ids, render_trace
from utils.config import get_config
from utils.errors import FullyOptimalError
from utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)


def _tree_ids(text: str) -> SpanningTree:
    try:
        return SpanningTree(tuple(int(token) for token in re.split(r"[\s,]+", text.strip()) if token))
    except ValueError:
        raise argparse.ArgumentTypeError(f"tree must list integer edge ids, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alpha",
        description="Fully optimal spanning trees of edge-ordered bipolar digraphs",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: ALPHA_LOG_LEVEL or WARNING)")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Bipolarity under the three characterizations")
    check.add_argument("file")

    alpha = commands.add_parser("alpha", help="Compute the fully optimal spanning tree")
    alpha.add_argument("file")
    alpha.add_argument("--method", choices=["brute", "delcon", "optimize"], default="optimize")
    alpha.add_argument("--formulation", choices=[f.value for f in Formulation], default=Formulation.CYCLE.value,
                       help="Branch test used by --method=delcon")
    alpha.add_argument("--trace", action="store_true", help="Print the optimizer's step trace")

    invert = commands.add_parser("invert", help="Orient the graph so that a tree is its alpha")
    invert.add_argument("file")
    invert.add_argument("--tree", type=_tree_ids, required=True, help="Edge ids, e.g. '1 4 5 7'")
    invert.add_argument("--p-direction", choices=[d.value for d in PDirection], default=PDirection.FORWARD.value)

    bijection = commands.add_parser("bijection", help="All bipolar orientations and their trees")
    bijection.add_argument("file")

    cocycles = commands.add_parser("cocycles", help="List the cocycles (bonds)")
    cocycles.add_argument("file")
    cocycles.add_argument("--directed-through", type=int, default=None, metavar="ID")

    verify = commands.add_parser("verify", help="Run the cross-method property suite")
    verify.add_argument("--corpus", choices=["exhaustive", "random"], default="exhaustive")
    verify.add_argument("--max-vertices", type=int, default=4)
    verify.add_argument("--max-edges", type=int, default=6)
    verify.add_argument("--orderings", type=int, default=6)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--count", type=int, default=100, help="Instances in the random corpus")

    gen = commands.add_parser("gen", help="Emit a random bipolar digraph")
    gen.add_argument("--vertices", type=int, required=True)
    gen.add_argument("--edges", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    solver = FullyOptimalSolver()
    seed = args.seed if getattr(args, "seed", None) is not None else get_config().verify_seed

    if args.command == "check":
        for characterization, verdict in solver.check(parse_graph_file(args.file)).items():
            print(f"{characterization.value}: {str(verdict).lower()}")
    elif args.command == "alpha":
        method = Method(args.method)
        if args.trace and method is not Method.OPTIMIZE:
            logger.warning("--trace is only produced by --method=optimize")
        tree, trace = solver.alpha(parse_graph_file(args.file), method,
                                   formulation=Formulation(args.formulation), emit_trace=args.trace)
        if trace is not None:
            print(render_trace(trace), end="")
        else:
            print(render_ids(tree.edges))
    elif args.command == "invert":
        oriented = solver.invert(parse_graph_file(args.file), args.tree, PDirection(args.p_direction))
        print(format_graph(oriented), end="")
    elif args.command == "bijection":
        for line in solver.bijection(parse_graph_file(args.file)).render_lines():
            print(line)
    elif args.command == "cocycles":
        g = parse_graph_file(args.file)
        if args.directed_through is None:
            for bond in solver.cocycles(g):
                print(render_bond(bond))
        else:
            for signed in solver.directed_cocycles(g, args.directed_through):
                print(signed)
    elif args.command == "verify":
        report = solver.verify(args.corpus, args.max_vertices, args.max_edges, args.orderings, seed, args.count)
        print(report.render(), end="")
        return 0 if report.ok else 1
    elif args.command == "gen":
        print(format_graph(solver.generate(args.vertices, args.edges, seed)), end="")
    return 0


def run_command(argv: Sequence[str]) -> int:
    """Parse argv, run the subcommand and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.log_level)
    logger.info("running %s", args.command)
    try:
        status = _dispatch(args)
    except FullyOptimalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    logger.info("%s finished with status %d", args.command, status)
    return status


def main(argv: Optional[List[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
