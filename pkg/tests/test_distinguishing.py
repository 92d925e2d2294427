import pytest
from hypothesis import given, settings, strategies as st

from conftest import classes, classes_upto, graphs
from oracles import brute_automorphisms, brute_distinguishing_number, brute_raw_and_orbits
from distcrit.automorphism import automorphism_group
from distcrit.distinguishing import (
    DistCache,
    count_inequivalent_distinguishing,
    disjoint_copies_distinguishing_number,
    distinguishing_number,
    distinguishing_number_by_search,
    find_distinguishing_labeling,
    inequivalent_distinguishing_labelings,
    is_distinguishing,
    multipartite_distinguishing_number,
    multipartite_parts,
    raw_distinguishing_count,
)
from distcrit.graph import (
    NamedGraphSpec,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    relabel,
    star_graph,
)


def test_is_distinguishing_examples():
    assert not is_distinguishing(cycle_graph(5), [1] * 5)
    assert not is_distinguishing(path_graph(3), [1, 2, 1])
    assert is_distinguishing(cycle_graph(6), [1, 1, 2, 1, 2, 2])


def test_is_distinguishing_c6_by_dihedral_check():
    phi = [1, 1, 2, 1, 2, 2]
    symmetries = brute_automorphisms(cycle_graph(6))
    assert len(symmetries) == 12
    fixing = [p for p in symmetries if all(phi[p[v]] == phi[v] for v in range(6))]
    assert fixing == [tuple(range(6))]


def test_is_distinguishing_length_mismatch():
    with pytest.raises(ValueError):
        is_distinguishing(cycle_graph(4), [1, 2])


@pytest.mark.parametrize(
    "g,d",
    [
        (path_graph(7), 2),
        (cycle_graph(5), 3),
        (complete_bipartite(4, 4), 5),
        (complete_graph(1), 1),
        (complete_graph(6), 6),
        (empty_graph(5), 5),
        (star_graph(5), 5),
        (complete_bipartite(2, 3), 3),
        (disjoint_union(complete_graph(4), complete_graph(4)), 5),
        (disjoint_union(complete_graph(5), complete_graph(5)), 6),
    ],
)
def test_known_values(g, d):
    r = distinguishing_number(g)
    assert r.value == d
    assert is_distinguishing(g, r.witness)
    assert len(set(r.witness)) <= d


@pytest.mark.parametrize("n", range(1, 7))
def test_values_match_brute_force(n):
    for g in classes(n):
        assert distinguishing_number(g).value == brute_distinguishing_number(g), g


def test_method_tags():
    assert distinguishing_number(path_graph(7)).method == "search"
    assert distinguishing_number(complete_bipartite(3, 3)).method == "multipartiteFormula"
    k4 = complete_graph(4)
    assert distinguishing_number(disjoint_union(k4, k4)).method == "disjointCopiesFormula"
    asym = [g for g in classes(6) if automorphism_group(g).order == 1][0]
    assert distinguishing_number(asym).method == "asymmetricShortcut"


@pytest.mark.parametrize("n", [4, 6, 8])
def test_search_agrees_with_formula_on_k_nn(n):
    g = complete_bipartite(n // 2, n // 2)
    assert distinguishing_number_by_search(g).value == distinguishing_number(g).value


def test_find_labeling_none_below_d():
    assert find_distinguishing_labeling(cycle_graph(5), 2) is None
    phi = find_distinguishing_labeling(cycle_graph(5), 3)
    assert phi is not None and is_distinguishing(cycle_graph(5), phi)


@pytest.mark.parametrize(
    "g,k,count",
    [
        (complete_graph(4), 4, 1),
        (complete_graph(2), 3, 3),
        (complete_graph(1), 7, 7),
        (complete_graph(4), 3, 0),
    ],
)
def test_dgk_examples(g, k, count):
    assert count_inequivalent_distinguishing(g, k) == count


@pytest.mark.parametrize("n", range(1, 6))
def test_dgk_matches_orbit_enumeration(n):
    for g in classes(n):
        for k in range(1, 4):
            raw, orbits, aut = brute_raw_and_orbits(g, k)
            assert raw_distinguishing_count(g, k) == raw
            assert count_inequivalent_distinguishing(g, k) == orbits == raw // aut


@given(graphs(max_n=6), st.integers(1, 4))
@settings(max_examples=30)
def test_dgk_monotone_in_k(g, k):
    assert count_inequivalent_distinguishing(g, k) <= count_inequivalent_distinguishing(g, k + 1)


def test_inequivalent_labelings_are_distinct_classes():
    g = cycle_graph(5)
    labs = inequivalent_distinguishing_labelings(g, 3)
    assert len(labs) == count_inequivalent_distinguishing(g, 3)
    assert all(is_distinguishing(g, phi) for phi in labs)


@pytest.mark.parametrize(
    "spec,d",
    [
        (NamedGraphSpec("completeBipartite", (5, 5)), 6),
        (NamedGraphSpec("completeBipartite", (4, 3)), 4),
        (NamedGraphSpec.multipartite([2, 2, 2]), 3),
        (NamedGraphSpec("complete", (5,)), 5),
        (NamedGraphSpec("emptyComplement", (4,)), 4),
    ],
)
def test_multipartite_formula(spec, d):
    assert multipartite_distinguishing_number(spec) == d


def test_multipartite_cross_check_k222():
    g = complete_multipartite([2, 2, 2])
    assert distinguishing_number_by_search(g).value == 3


def test_multipartite_parts_recognition():
    assert multipartite_parts(complete_multipartite([3, 2])) == [[0, 1, 2], [3, 4]]
    assert multipartite_parts(path_graph(4)) is None
    assert multipartite_parts(cycle_graph(5)) is None


def test_multipartite_rejects_other_families():
    with pytest.raises(ValueError):
        multipartite_distinguishing_number(NamedGraphSpec("cycle", (5,)))


@pytest.mark.parametrize("h,c,d", [(complete_graph(4), 2, 5), (complete_graph(1), 5, 5), (complete_graph(2), 3, 3)])
def test_disjoint_copies_examples(h, c, d):
    assert disjoint_copies_distinguishing_number(h, c) == d
    assert distinguishing_number_by_search(disjoint_union(*[h] * c)).value == d


def test_disjoint_copies_rejects_bad_input():
    with pytest.raises(ValueError):
        disjoint_copies_distinguishing_number(empty_graph(2), 2)
    with pytest.raises(ValueError):
        disjoint_copies_distinguishing_number(complete_graph(2), 0)


def test_mixed_components_take_maximum():
    g = disjoint_union(complete_graph(3), path_graph(4))
    assert distinguishing_number(g).value == 3
    assert distinguishing_number_by_search(g).value == 3


@given(graphs(max_n=8))
@settings(max_examples=40)
def test_value_agrees_with_pure_search(g):
    assert distinguishing_number(g).value == distinguishing_number_by_search(g).value


@given(graphs(max_n=8), st.data())
@settings(max_examples=40)
def test_cache_is_transparent(g, data):
    cache = DistCache()
    perm = data.draw(st.permutations(list(range(g.n))))
    h = relabel(g, perm)
    first = distinguishing_number(g, cache=cache)
    second = distinguishing_number(h, cache=cache)
    assert first.value == second.value == distinguishing_number(g).value
    assert is_distinguishing(h, second.witness)
    assert cache.hits >= 1


def test_complement_invariance_to_order_6():
    for g in classes_upto(6):
        assert distinguishing_number(g).value == distinguishing_number(complement(g)).value
