from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from distcrit.enumerate import graphs_of_order  # noqa: E402
from distcrit.graph import Graph, build_graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def classes(n: int, family: str = "all") -> tuple[Graph, ...]:
    return tuple(graphs_of_order(n, family))


def classes_upto(max_n: int, family: str = "all", min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in classes(n, family)]


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, p: float | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def relabelings(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report_criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record
