import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_components
from petersen_forcing.graph import (
    bridge_sides,
    bridges,
    build_from_edge_list,
    build_generalized_petersen,
    components,
    components_with_parity,
    parse_edge_list,
)


@pytest.mark.parametrize("n", [3, 5, 8, 12, 25])
def test_petersen_sizes_and_cubic(n):
    g = build_generalized_petersen(n, 2)
    assert g.num_vertices == 2 * n
    assert g.num_edges == 3 * n
    assert all(g.degree(x) == 3 for x in range(2 * n))


def test_vertex_numbering_and_edge_order():
    g = build_generalized_petersen(5, 2)
    assert (g.u(0), g.v(0), g.u(6), g.v(7)) == (0, 5, 1, 7)
    # spokes occupy the first n edge ids
    assert [tuple(sorted(g.edges[i])) for i in range(5)] == [(i, i + 5) for i in range(5)]
    assert all(g.is_spoke(i) for i in range(5)) and not g.is_spoke(5)
    assert g.has_edge(0, 2) and g.has_edge(5, 6) and not g.has_edge(0, 1)


def test_small_n_deduplicates():
    # P(4,2): u_i u_{i+2} repeats, so inner edges collapse
    g = build_generalized_petersen(4, 2)
    assert g.num_edges == 10
    assert g.is_petersen2


@pytest.mark.parametrize("n,k", [(2, 1), (0, 2), (5, 0), (5, 5)])
def test_bad_parameters(n, k):
    with pytest.raises(ValueError):
        build_generalized_petersen(n, k)


def test_edge_list_round_trip():
    g = build_generalized_petersen(7, 3)
    h = parse_edge_list(g.to_edge_list())
    assert sorted(map(sorted, g.edges)) == sorted(map(sorted, h.edges))
    assert len(g.to_edge_list().strip().splitlines()) == 21


def test_edge_list_rejects_garbage():
    with pytest.raises(ValueError):
        parse_edge_list("0 1\n1 2 3\n")
    with pytest.raises(ValueError):
        build_from_edge_list([(0, 0)])


def test_components_with_parity():
    g = build_generalized_petersen(5, 2)
    parts = components_with_parity(g, [0, 5])
    assert len(parts) == 1 and parts[0][1] == "even"
    path = build_from_edge_list([(0, 1), (1, 2), (3, 4)])
    kinds = sorted(p for _, p in components_with_parity(path))
    assert kinds == ["even", "odd"]


def test_petersen_is_bridgeless():
    for n in range(3, 15):
        assert bridges(build_generalized_petersen(n, 2)) == set()


def random_graph(rng: random.Random, nv: int, p: float):
    pairs = [(a, b) for a in range(nv) for b in range(a + 1, nv) if rng.random() < p]
    return build_from_edge_list(pairs, nv)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 12), st.floats(0.1, 0.6))
def test_bridges_match_brute_force(seed, nv, p):
    g = random_graph(random.Random(seed), nv, p)
    base = brute_components(nv, g.edges)
    expected = {e for e in range(g.num_edges)
                if brute_components(nv, [g.edges[f] for f in range(g.num_edges) if f != e]) > base}
    assert bridges(g) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 12))
def test_bridge_child_side_is_a_component_after_removal(seed, nv):
    g = random_graph(random.Random(seed), nv, 0.3)
    for e, side in bridge_sides(g):
        a, b = g.edges[e]
        assert bool(side >> a & 1) != bool(side >> b & 1)
        rest = [g.edges[f] for f in range(g.num_edges) if f != e]
        h = build_from_edge_list(rest, nv)
        assert side in components(h)
