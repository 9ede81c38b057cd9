import pytest

from cycles.cocycles import enumerate_cocycles
from storage.graph_files import (
    FixtureStore,
    format_graph,
    parse_graph_file,
    parse_graph_text,
    write_graph_file,
)
from storage.rendering import render_bond, render_ids
from utils.errors import GraphFormatError

TRIANGLE_TEXT = """# comment
vertices: 3

vertex u
vertex v
vertex w
edge 1 u w
edge 2 u v
edge 3 v w
"""


def test_parse_and_format(t3):
    g = parse_graph_text(TRIANGLE_TEXT)
    assert g == t3
    assert parse_graph_text(format_graph(g)) == g
    assert format_graph(t3).splitlines()[0] == "vertices: 3"


@pytest.mark.parametrize("text, line", [
    ("vertex u\n", 1),
    ("vertices: 2\nvertex u\nvertex v\nedge 1 u x\n", 4),
    ("vertices: 2\nvertex u\nvertex v\nedge 1 u v\nedge 1 v u\n", 5),
    ("vertices: 2\nvertex u\nvertex u\n", 3),
    ("vertices: 2\nvertex u\nvertex v\nedge one u v\n", 4),
    ("vertices: 2\nvertex u\nvertex v\narc 1 u v\n", 4),
    ("# header\nvertices: 3\nvertex u\nvertex v\n", 2),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text(text)
    assert info.value.line_number == line
    assert str(info.value).startswith(f"line {line}:")


def test_empty_file():
    with pytest.raises(GraphFormatError):
        parse_graph_text("# nothing here\n")


def test_missing_file(tmp_path):
    with pytest.raises(GraphFormatError):
        parse_graph_file(tmp_path / "absent.graph")


def test_write_then_read(tmp_path, example):
    path = tmp_path / "copy.graph"
    write_graph_file(example, path)
    assert parse_graph_file(path) == example


def test_fixture_store(store, t3, p2):
    assert store.names() == ["example", "parallel_pair", "triangle"]
    assert store.load("triangle") == t3
    assert store.load("parallel_pair") == p2
    assert store.golden("example_trace").endswith("alpha=1 4 5 7\n")


def test_fixture_directory_from_environment(tmp_path, monkeypatch, t3):
    write_graph_file(t3, tmp_path / "mine.graph")
    monkeypatch.setenv("ALPHA_FIXTURE_DIR", str(tmp_path))
    assert FixtureStore().names() == ["mine"]
    assert FixtureStore().load("mine") == t3


def test_rendering(t3):
    assert render_ids([7, 1, 5, 4]) == "1 4 5 7"
    assert [render_bond(bond) for bond in enumerate_cocycles(t3)] == [
        "+{1,2}/-{} side={u}",
        "+{1,3}/-{} side={u,v}",
        "+{2}/-{3} side={u,w}",
    ]


def test_merge_separator_is_rejected_with_its_line():
    text = "vertices: 2\nvertex a+b\nvertex a\n"
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text(text)
    assert info.value.line_number == 2


def test_non_utf8_file(tmp_path):
    path = tmp_path / "bad.graph"
    path.write_bytes(b"vertices: 1\nvertex \xff\n")
    with pytest.raises(GraphFormatError, match="not UTF-8"):
        parse_graph_file(path)
