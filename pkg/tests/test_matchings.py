import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_perfect_matchings
from petersen_forcing.graph import build_from_edge_list, build_generalized_petersen
from petersen_forcing.matchings import (
    BudgetExceeded,
    MatchingType,
    PerfectMatching,
    canonical_key,
    canonicalize_dihedral,
    census,
    classify,
    count_perfect_matchings,
    count_type1,
    count_type2,
    dihedral_classes,
    enumerate_perfect_matchings,
    orbit,
    reflect,
    rotate,
    spoke_gaps,
)


@pytest.mark.parametrize("n", range(3, 9))
def test_enumeration_matches_brute_force(n):
    g = build_generalized_petersen(n, 2)
    got = {m.edges for m in enumerate_perfect_matchings(g)}
    assert got == set(brute_perfect_matchings(g))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6), st.floats(0.2, 0.7))
def test_enumeration_on_random_graphs(seed, half, p):
    rng = random.Random(seed)
    nv = 2 * half
    pairs = [(a, b) for a in range(nv) for b in range(a + 1, nv) if rng.random() < p]
    g = build_from_edge_list(pairs, nv)
    got = [m.edges for m in enumerate_perfect_matchings(g)]
    assert len(got) == len(set(got))
    assert set(got) == set(brute_perfect_matchings(g))
    assert count_perfect_matchings(g, limit=2) == min(2, len(got))


def test_from_edges_validates():
    g = build_generalized_petersen(5, 2)
    with pytest.raises(ValueError):
        PerfectMatching.from_edges(g, [0, 1])
    m = PerfectMatching.from_edges(g, range(5))
    assert len(m) == 5 and m.partner()[0] == 5


@pytest.mark.parametrize("n,t1,t2", [(5, 6, 0), (6, 7, 3), (7, 8, 7), (8, 13, 4), (9, 19, 3), (10, 26, 10),
                                     (16, 173, 20), (25, 3156, 150)])
def test_count_formulas_known_values(n, t1, t2):
    assert (count_type1(n), count_type2(n)) == (t1, t2)


@pytest.mark.parametrize("n", range(3, 21))
def test_count_formulas_vs_enumeration(n):
    c = census(n)
    assert (c.type1, c.type2) == (count_type1(n), count_type2(n))


def test_classify_spoke_examples():
    g = build_generalized_petersen(9, 2)
    all_spokes = PerfectMatching(g, frozenset(range(9)))
    assert classify(all_spokes) is MatchingType.TYPE1
    assert spoke_gaps(all_spokes) == [0] * 9


@pytest.mark.parametrize("n", range(5, 13))
def test_type_is_dihedral_invariant(n):
    g = build_generalized_petersen(n, 2)
    for m in enumerate_perfect_matchings(g):
        kind = classify(m)
        assert classify(rotate(m, 1)) is kind
        assert classify(reflect(m, 0)) is kind


@pytest.mark.parametrize("n", range(5, 13))
def test_canonicalize_idempotent_and_orbit_partition(n):
    g = build_generalized_petersen(n, 2)
    ms = list(enumerate_perfect_matchings(g))
    for m in ms:
        c = canonicalize_dihedral(m)
        assert canonicalize_dihedral(c).edges == c.edges
        assert canonical_key(c) == canonical_key(m)
        assert c.edges in orbit(m)
    classes = dihedral_classes(g)
    assert sum(oc.size for oc in classes) == len(ms)


def test_dihedral_budget():
    g = build_generalized_petersen(20, 2)
    with pytest.raises(BudgetExceeded) as info:
        dihedral_classes(g, limit=3)
    assert info.value.progress == 3
