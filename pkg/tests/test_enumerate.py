import io
from itertools import combinations

import pytest

from conftest import classes
from oracles import labeled_class_count
from distcrit.automorphism import are_isomorphic, certificate
from distcrit.enumerate import EnumerationConfig, EnumerationError, enumerate_graphs, graphs_of_order
from distcrit.graph import is_connected
from distcrit.graph6 import write_graph6


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_labeled_dedup(n):
    assert len(classes(n)) == labeled_class_count(n)


@pytest.mark.parametrize("n,count", [(1, 1), (4, 11), (5, 34)])
def test_known_counts(n, count):
    assert len(classes(n)) == count


@pytest.mark.parametrize("n", range(1, 7))
def test_pairwise_non_isomorphic(n):
    gs = classes(n)
    assert len({certificate(g) for g in gs}) == len(gs)
    for g, h in combinations(gs[:40], 2):
        assert not are_isomorphic(g, h)


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_family_is_the_connected_subset(n):
    conn = list(graphs_of_order(n, "connected"))
    assert all(is_connected(g) for g in conn)
    assert {certificate(g) for g in conn} == {certificate(g) for g in classes(n) if is_connected(g)}


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_family_is_the_tree_subset(n):
    trees = list(graphs_of_order(n, "tree"))
    expected = {certificate(g) for g in classes(n) if is_connected(g) and g.size == n - 1}
    assert {certificate(g) for g in trees} == expected
    assert len(trees) == len(expected)


def test_deterministic_order():
    a = [write_graph6(g) for g in enumerate_graphs(EnumerationConfig(max_order=6))]
    b = [write_graph6(g) for g in enumerate_graphs(EnumerationConfig(max_order=6))]
    assert a == b
    orders = [len(s) and s for s in a]
    assert orders


def test_orders_ascending_and_filters():
    cfg = EnumerationConfig(max_order=6, min_order=4, connected_only=True)
    gs = list(enumerate_graphs(cfg))
    assert [g.n for g in gs] == sorted(g.n for g in gs)
    assert len(gs) == 6 + 21 + 112
    cfg = EnumerationConfig(max_order=5, predicate=lambda g: g.size == 2)
    assert all(g.size == 2 for g in enumerate_graphs(cfg))


def test_graph6_stream_source():
    text = io.StringIO("Bw\nC~\nA_\n@\n")
    cfg = EnumerationConfig(max_order=3, min_order=2, source="graph6Stream", stream=text)
    assert [write_graph6(g) for g in enumerate_graphs(cfg)] == ["Bw", "A_"]


def test_hard_stop():
    with pytest.raises(EnumerationError):
        EnumerationConfig(max_order=11)
    EnumerationConfig(max_order=11, source="graph6Stream", stream=[])
    with pytest.raises(EnumerationError):
        EnumerationConfig(max_order=5, source="graph6Stream")
    with pytest.raises(EnumerationError):
        list(graphs_of_order(3, "forest"))
