import itertools

import pytest

from petersen_forcing.graph import Graph

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def brute_perfect_matchings(g: Graph) -> list[frozenset]:
    """All perfect matchings by trying every edge subset of the right size."""
    if g.num_vertices % 2:
        return []
    half = g.num_vertices // 2
    out = []
    for combo in itertools.combinations(range(g.num_edges), half):
        seen = set()
        ok = True
        for e in combo:
            a, b = g.edges[e]
            if a in seen or b in seen:
                ok = False
                break
            seen.update((a, b))
        if ok:
            out.append(frozenset(combo))
    return out


def brute_components(num_vertices: int, pairs) -> int:
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(num_vertices)})


@pytest.fixture
def brute_pms():
    return brute_perfect_matchings


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
