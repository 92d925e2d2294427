import io

import networkx as nx
import pytest
from hypothesis import given

from conftest import classes_upto, graphs
from distcrit.graph import build_graph, complete_graph, cycle_graph, empty_graph
from distcrit.graph6 import Graph6Error, parse_graph6, stream_graph6, write_graph6, write_stream


def nx_graph6(g) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


@pytest.mark.parametrize(
    "text,n,edges",
    [
        ("@", 1, []),
        ("A_", 2, [(0, 1)]),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("B?", 3, []),
        ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ],
)
def test_known_vectors(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n and g.edges() == edges
    assert write_graph6(g) == text


def test_header_and_whitespace_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)
    assert parse_graph6(b"Bw") == complete_graph(3)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("~", "truncated extended header"),
        ("C", "truncated payload"),
        ("Bw?", "trailing bytes"),
        ("B\x7f", "outside printable range"),
        (":Fa@x^", "sparse6"),
        ("&B?", "digraph6"),
        ("", "empty"),
    ],
)
def test_malformed(text, fragment):
    with pytest.raises(Graph6Error, match=fragment):
        parse_graph6(text)


def test_order_above_capacity():
    with pytest.raises(Graph6Error, match="exceeds capacity"):
        parse_graph6("~?@@" + "?" * 347)


def test_padding_lenient_and_strict():
    # order 2 has one data bit and five padding bits
    assert parse_graph6("A`") == complete_graph(2)
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("A`", strict=True)
    assert write_graph6(parse_graph6("A`")) == "A_"


@pytest.mark.parametrize("n", [62, 63, 64])
def test_extended_header_boundary(n):
    g = cycle_graph(n)
    text = write_graph6(g)
    assert text == nx_graph6(g)
    assert (text[0] == "~") == (n >= 63)
    assert parse_graph6(text) == g


def test_roundtrip_exhaustive_to_order_7():
    for g in classes_upto(7):
        text = write_graph6(g)
        assert len(text) == 1 + (g.n * (g.n - 1) // 2 + 5) // 6
        assert parse_graph6(text, strict=True) == g


@given(graphs(max_n=64))
def test_roundtrip_random(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    assert text == nx_graph6(g)


def test_stream_skips_blanks_and_comments():
    src = io.StringIO(">>comment\n\nBw\n>>graph6<<C~\n\n@\n")
    got = list(stream_graph6(src))
    assert got == [complete_graph(3), complete_graph(4), empty_graph(1)]


def test_stream_empty():
    assert list(stream_graph6(io.StringIO(""))) == []


def test_stream_error_names_line():
    src = ["Bw\n", "Bx?\n", "C~\n"]
    it = stream_graph6(src)
    assert next(it) == complete_graph(3)
    with pytest.raises(Graph6Error) as info:
        next(it)
    assert info.value.line == 2
    assert str(info.value).startswith("line 2:")


def test_write_stream():
    out = io.StringIO()
    assert write_stream([complete_graph(3), build_graph(2, [])], out) == 2
    assert out.getvalue() == "Bw\nA?\n"
