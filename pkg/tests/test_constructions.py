import pytest

from petersen_forcing import constructions as cons
from petersen_forcing.chains import decode, encode
from petersen_forcing.forcing import forcing_number, is_forcing_set
from petersen_forcing.matchings import MatchingType, classify


@pytest.mark.parametrize("n,t1max,t1min,t2min", [(9, 3, NotImplemented, NotImplemented), (12, 3, 3, 2),
                                                 (22, 6, 4, 3), (40, 10, 7, 5)])
def test_formula_values(n, t1max, t1min, t2min):
    assert cons.type1_max(n) == t1max
    if t1min is NotImplemented:
        assert cons.type1_min(n) is cons.NOT_CLAIMED
        assert cons.type2_min(n) is cons.NOT_CLAIMED
    else:
        assert cons.type1_min(n) == t1min
        assert cons.type2_min(n) == t2min


@pytest.mark.parametrize("n,expected", [(33, cons.NOT_CLAIMED), (34, 6), (37, 6), (38, 7), (45, 8), (59, 10)])
def test_type2_max(n, expected):
    assert cons.type2_max(n) == expected


def test_delta():
    assert [cons.delta(n) for n in (38, 45, 52, 39, 44)] == [1, 1, 1, 0, 0]


def test_dc_pairs():
    assert cons.dc_pairs(24) == [(0, 8), (3, 4), (6, 0)]
    assert cons.dc_pairs(5) == []
    with pytest.raises(ValueError):
        cons.dc_closed_form(0, 0)


@pytest.mark.parametrize("n", [37, 38, 40, 44, 47])
def test_dc_closed_form_at_larger_n(n):
    for d, c in cons.dc_pairs(n):
        m = decode("D" * d + "C" * c, n)
        assert forcing_number(m.graph, m)[0] == cons.dc_closed_form(d, c), (d, c)


def test_spectrum_formula_and_gap():
    assert cons.spectrum_formula(33) is cons.NOT_CLAIMED
    assert cons.spectrum_formula(60) == ((6, 9), (11, 15))
    assert not cons.has_gap(94) and cons.has_gap(95) and cons.has_gap(60)
    assert not any(cons.has_gap(n) for n in range(3, 34))


@pytest.mark.parametrize("which", list(cons.Extremal))
@pytest.mark.parametrize("n", range(9, 60))
def test_recipes_build(which, n):
    if n < cons.VALID_FROM[which]:
        with pytest.raises(ValueError):
            cons.build_extremal(n, which)
        return
    recipe = cons.build_extremal(n, which)
    recipe.check()
    assert classify(recipe.matching) is recipe.kind


@pytest.mark.parametrize("which,formula", [(cons.Extremal.T1MAX, cons.type1_max), (cons.Extremal.T1MIN, cons.type1_min),
                                           (cons.Extremal.T2MIN, cons.type2_min)])
@pytest.mark.parametrize("n", [12, 17, 23, 30])
def test_recipes_attain_formula(which, formula, n):
    recipe = cons.build_extremal(n, which)
    assert forcing_number(recipe.graph, recipe.matching)[0] == formula(n)


@pytest.mark.parametrize("n", range(12, 89, 4))
def test_d_only_explicit_set(n):
    r = cons.d_only_recipe(n)
    r.check()
    assert is_forcing_set(r.graph, r.matching, r.forcing_set)


@pytest.mark.parametrize("n", range(7, 88, 4))
def test_one_c_explicit_set(n):
    r = cons.one_c_recipe(n)
    r.check()
    assert is_forcing_set(r.graph, r.matching, r.forcing_set)


def test_exceptional_recipe_bump():
    r = cons.exceptional_t2_recipe(38)
    assert forcing_number(r.graph, r.matching)[0] == cons.type2_max(38)


def test_flip_rejects_non_alternating():
    m = decode("B^9", 9)
    g = m.graph
    with pytest.raises(ValueError):
        cons.flip_cycle(m, [g.u(0), g.u(2), g.u(4), g.v(4), g.v(3), g.v(2), g.v(1), g.v(0)])


def test_ba_b5_round_trip():
    m = decode("BAB^6", 11)
    i = cons.chain_columns(m, "BA")[0]
    m2 = cons.transform_ba_to_b5(m, i)
    assert encode(m2).letters == "B" * 11
    assert cons.transform_b5_to_ba(m2, i).edges == m.edges


def test_cd_dc_round_trip():
    m = decode("CDC^3", 16)
    i = cons.chain_columns(m, "CD")[0]
    m2 = cons.transform_cd_to_dc(m, i)
    assert sorted(encode(m2).counts().items()) == [("C", 4), ("D", 1)]
    assert cons.transform_dc_to_cd(m2, i).edges == m.edges


def test_c4_d3_round_trip():
    m = decode("C^4D", 16)
    j = cons.chain_columns(m, "CCCC")[0]
    m2 = cons.transform_c4_to_d3(m, j)
    assert classify(m2) is MatchingType.TYPE2
    assert encode(m2).counts() == {"C": 0, "D": 4}
    assert cons.transform_d3_to_c4(m2, j).edges == m.edges
