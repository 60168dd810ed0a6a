import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petersen_forcing.chains import (
    ChainParseError,
    ChainWord,
    decode,
    encode,
    format_chain,
    parse_chain_expression,
    period,
    rotations,
)
from petersen_forcing.graph import build_generalized_petersen
from petersen_forcing.matchings import MatchingType, classify, enumerate_perfect_matchings, reflect, rotate


@pytest.mark.parametrize("text,letters", [
    ("A^2B^4(AB)^2B^4", "AABBBBABABBBBB"),
    ("CD^4C^2", "CDDDDCC"),
    ("C D^{3}", "CDDD"),
    ("((CD)^2)^2", "CDCDCDCD"),
    ("B", "B"),
])
def test_parse(text, letters):
    assert parse_chain_expression(text).letters == letters


@pytest.mark.parametrize("text", ["", "A^2C", "(AB", "AB)", "X", "A^", "(AB)^0"])
def test_parse_errors(text):
    with pytest.raises(ChainParseError):
        parse_chain_expression(text)


def test_mixed_alphabet_position():
    with pytest.raises(ChainParseError) as info:
        parse_chain_expression("A^2C")
    assert info.value.position == 3


def test_format_chain():
    assert format_chain("AABBBBABABBBBB") == "A^2B^4ABAB^5"
    assert parse_chain_expression(format_chain("AABBBBABABBBBB")).letters == "AABBBBABABBBBB"


def test_counts_and_length():
    w = parse_chain_expression("A^2B^4(AB)^2B^4")
    assert w.counts() == {"A": 4, "B": 10}
    assert w.length == 26
    assert ChainWord("CD").length == 7


@pytest.mark.parametrize("word,p", [("ABAB", 2), ("AAB", 3), ("BBBB", 1), ("CDCCDC", 3), ("D", 1)])
def test_period(word, p):
    assert period(word) == p
    assert len(set(rotations(word))) == p


@pytest.mark.parametrize("n", range(5, 21))
def test_round_trip_all_matchings(n):
    g = build_generalized_petersen(n, 2)
    for m in enumerate_perfect_matchings(g):
        w = encode(m)
        assert w.alphabet == ("AB" if classify(m) is MatchingType.TYPE1 else "CD")
        assert decode(w, n, graph=g).edges == m.edges


def test_spec_style_examples():
    m = decode("A^2B^4(AB)^2B^4", 26)
    assert encode(m).letters == "AABBBBABABBBBB"
    m = decode("CD^4C^2", 25)
    assert encode(m).letters == "CDDDDCC"
    assert classify(m) is MatchingType.TYPE2


def test_length_mismatch():
    with pytest.raises(ValueError, match="36"):
        decode("A^9", 25)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from("AB"), min_size=2, max_size=9), st.integers(0, 40))
def test_random_type1_words(letters, shift):
    word = "".join(letters)
    n = ChainWord(word).length
    if n < 5:
        return
    m = decode(word, n, anchor=shift % n)
    assert classify(m) is MatchingType.TYPE1
    w = encode(m)
    assert w.letters in rotations(word)
    assert decode(w, n).edges == m.edges
    assert decode(encode(rotate(m, 3)), n).edges == rotate(m, 3).edges
    assert decode(encode(reflect(m)), n).edges == reflect(m).edges
