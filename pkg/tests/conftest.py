from itertools import combinations

import pytest
from hypothesis import settings

from weightspaces.graph import Graph

# brute-force reference helpers make per-example timings noisy
settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(label: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f" -- {detail}" if detail else ""))
        return passed
    return record


# Plain subset-iteration brute force; deliberately shares nothing with the
# library's enumerators.

def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def brute_independent_sets(g: Graph):
    return [frozenset(s) for s in subsets(range(g.n))
            if all(not g.has_edge(a, b) for a, b in combinations(s, 2))]


def brute_maximal_independent_sets(g: Graph):
    ind = brute_independent_sets(g)
    return [s for s in ind if not any(s < t for t in ind)]


def brute_matchings(g: Graph):
    out = []
    for s in subsets(range(g.m)):
        ends = [x for i in s for x in g.edges[i]]
        if len(ends) == len(set(ends)):
            out.append(frozenset(s))
    return out


def brute_maximal_matchings(g: Graph):
    ms = brute_matchings(g)
    return [m for m in ms if not any(m < t for t in ms)]


def graphs(min_n: int = 0, max_n: int = 8):
    """Hypothesis strategy for labeled graphs on up to ``max_n`` vertices."""
    from hypothesis import strategies as st

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        pairs = list(combinations(range(n), 2))
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])

    return build()
