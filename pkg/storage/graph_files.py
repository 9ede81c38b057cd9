"""
Line-oriented graph text format.

    vertices: <n>
    vertex <label>
    edge <id> <tail> <head>

Blank lines and lines starting with '#' are ignored. Vertices must be
declared before an edge uses them.
"""

import logging
import os
from pathlib import Path
from typing import List, Optional, Set, Tuple, Union

from graph.ordered_digraph import MERGE_SEPARATOR, OrderedDigraph, build_graph
from utils.errors import GraphError, GraphFormatError

logger = logging.getLogger(__name__)

DEFAULT_FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def parse_graph_text(text: str) -> OrderedDigraph:
    """Parse the graph text format; errors carry the offending line number."""
    declared: Optional[int] = None
    header_line = 0
    vertices: List[str] = []
    seen_vertices: Set[str] = set()
    edges: List[Tuple[int, str, str]] = []
    seen_edges: Set[int] = set()

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        keyword = tokens[0]

        if declared is None:
            if keyword != "vertices:" or len(tokens) != 2:
                raise GraphFormatError("expected 'vertices: <n>' before anything else", number)
            try:
                declared = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"vertex count must be an integer, got {tokens[1]!r}", number)
            if declared < 0:
                raise GraphFormatError("vertex count must not be negative", number)
            header_line = number
        elif keyword == "vertex":
            if len(tokens) != 2:
                raise GraphFormatError("expected 'vertex <label>'", number)
            if tokens[1] in seen_vertices:
                raise GraphFormatError(f"duplicate vertex {tokens[1]!r}", number)
            if MERGE_SEPARATOR in tokens[1]:
                raise GraphFormatError(f"vertex label {tokens[1]!r} may not contain {MERGE_SEPARATOR!r}", number)
            seen_vertices.add(tokens[1])
            vertices.append(tokens[1])
        elif keyword == "edge":
            if len(tokens) != 4:
                raise GraphFormatError("expected 'edge <id> <tail> <head>'", number)
            try:
                edge_id = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"edge id must be an integer, got {tokens[1]!r}", number)
            if edge_id <= 0:
                raise GraphFormatError(f"edge id must be positive, got {edge_id}", number)
            if edge_id in seen_edges:
                raise GraphFormatError(f"duplicate edge id {edge_id}", number)
            for endpoint in tokens[2:]:
                if endpoint not in seen_vertices:
                    raise GraphFormatError(f"edge {edge_id} uses undeclared vertex {endpoint!r}", number)
            seen_edges.add(edge_id)
            edges.append((edge_id, tokens[2], tokens[3]))
        else:
            raise GraphFormatError(f"unknown keyword {keyword!r}", number)

    if declared is None:
        raise GraphFormatError("empty graph file", None)
    if declared != len(vertices):
        raise GraphFormatError(f"declared {declared} vertices but listed {len(vertices)}", header_line)
    try:
        return build_graph(vertices, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc), None)


def parse_graph_file(path: Union[str, Path]) -> OrderedDigraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror or exc}")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path} is not UTF-8 text: {exc.reason} at byte {exc.start}")
    logger.debug("parsing graph file %s", path)
    return parse_graph_text(text)


def format_graph(g: OrderedDigraph) -> str:
    """Inverse of parse_graph_text, edges in id order."""
    lines = [f"vertices: {len(g.vertices)}"]
    lines.extend(f"vertex {v}" for v in g.vertices)
    lines.extend(f"edge {edge.id} {edge.tail} {edge.head}" for edge in g.edges)
    return "\n".join(lines) + "\n"


def write_graph_file(g: OrderedDigraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


class FixtureStore:
    """
    Named graph fixtures shipped with the repository.
    The directory comes from the argument, then ALPHA_FIXTURE_DIR, then the
    repository's fixtures/ folder.
    """

    def __init__(self, directory: Optional[Union[str, Path]] = None):
        """Initialize fixture store."""
        configured = directory or os.getenv("ALPHA_FIXTURE_DIR")
        self.directory = Path(configured) if configured else DEFAULT_FIXTURE_DIR

    def path(self, name: str) -> Path:
        return self.directory / f"{name}.graph"

    def load(self, name: str) -> OrderedDigraph:
        """Load fixtures/<name>.graph."""
        return parse_graph_file(self.path(name))

    def golden(self, name: str) -> str:
        return (self.directory / f"{name}.golden").read_text(encoding="utf-8")

    def names(self) -> List[str]:
        return sorted(p.stem for p in self.directory.glob("*.graph"))
