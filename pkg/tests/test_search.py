import pytest

from distcrit.automorphism import certificate
from distcrit.graph import (
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
)
from distcrit.search import (
    SUITES,
    run_verification_suite,
    search_critical,
    search_minimal_asymmetric,
)


def certs(gs):
    return {certificate(g) for g in gs}


def test_three_critical_order_5():
    found = [g for g, r, _ in search_critical(5, d_filter=3)]
    expected = [cycle_graph(3), cycle_graph(4), cycle_graph(5), empty_graph(3), complement(cycle_graph(4))]
    assert certs(found) == certs(expected) and len(found) == 5


def test_two_critical_order_3():
    found = [g for g, r, _ in search_critical(3, d_filter=2)]
    assert certs(found) == certs([complete_graph(2), empty_graph(2)])


def test_critical_results_carry_audits():
    for g, r, audit in search_critical(4):
        assert r.is_critical
        if g.n >= 2:
            assert audit is not None and audit.theorem_failures == []


def test_strong_filter_superset():
    crit = certs(g for g, _, _ in search_critical(5) if g.n >= 2)
    strong = certs(g for g, _, _ in search_critical(5, strong=True))
    assert crit <= strong


def test_minimal_asymmetric_small_is_empty():
    assert search_minimal_asymmetric(5) == []
    six = search_minimal_asymmetric(6)
    assert len(six) == 8


def test_parallel_matches_sequential():
    seq = [(certificate(g), r.d) for g, r, _ in search_critical(6, workers=1)]
    par = [(certificate(g), r.d) for g, r, _ in search_critical(6, workers=2)]
    assert seq == par
    a = run_verification_suite("complement-invariance", 6, workers=1)
    b = run_verification_suite("complement-invariance", 6, workers=2)
    assert a.key() == b.key()


def test_suite_determinism():
    a = run_verification_suite("three-critical", 6)
    b = run_verification_suite("three-critical", 6)
    assert a.key() == b.key() and a.passed


def test_three_critical_suite_order_7():
    r = run_verification_suite("three-critical", 7)
    assert r.passed and r.failures == []
    assert len(r.found) == 5


def test_complement_invariance_suite_order_6():
    r = run_verification_suite("complement-invariance", 6)
    assert r.passed
    assert r.assertions_run >= 156


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_verification_suite("no-such-suite", 5)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_small(name):
    r = run_verification_suite(name, 5)
    assert r.failures == [], r.failures
    if name != "minimal-asymmetric":
        # no asymmetric graph exists below order 6
        assert r.assertions_run > 0


def test_disconnected_5_critical_order_8_includes_2k4():
    k4 = complete_graph(4)
    found = [g for g, _, _ in search_critical(8, d_filter=5, disconnected_only=True)]
    assert certs(found) == certs([empty_graph(5), disjoint_union(k4, k4)])
