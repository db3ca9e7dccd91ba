import pytest
from hypothesis import given

from graphpowers import (
    EdgeListError,
    Digraph,
    cayley_directed,
    cycle,
    format_edgelist,
    parse_edgelist,
    read_edgelist,
    write_edgelist,
)

from test_graph import small_graphs


def test_format_c4():
    assert format_edgelist(cycle(4)) == "U 4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_comments_ignored_and_not_counted():
    text = "# leading\nU 3 2\n# middle\n0 1\n1 2\n"
    G = parse_edgelist(text)
    assert G.m == 2


def test_directed_roundtrip():
    D = cayley_directed(5, {1})
    back = parse_edgelist(format_edgelist(D, ["family=x"]))
    assert isinstance(back, Digraph) and back == D


@given(small_graphs())
def test_roundtrip(G):
    assert parse_edgelist(format_edgelist(G, ["hello"])) == G


def test_file_roundtrip(tmp_path):
    p = tmp_path / "c.el"
    write_edgelist(p, cycle(9), ["family=cycle n=9"])
    assert read_edgelist(p) == cycle(9)
    assert b"\r" not in p.read_bytes()


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("X 3 1\n0 1\n", 1),
        ("U 3\n", 1),
        ("U 3 1\n1 0\n", 2),
        ("U 3 1\n0 3\n", 2),
        ("U 3 1\n0 0\n", 2),
        ("# c\nU 3 1\n0 x\n", 3),
        ("U 3 1\n0 1 2\n", 2),
    ],
)
def test_malformed_reports_line(text, lineno):
    with pytest.raises(EdgeListError) as info:
        parse_edgelist(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_count_mismatch():
    with pytest.raises(EdgeListError, match="announces 2"):
        parse_edgelist("U 3 2\n0 1\n")


def test_missing_header():
    with pytest.raises(EdgeListError, match="missing header"):
        parse_edgelist("# only comments\n")
