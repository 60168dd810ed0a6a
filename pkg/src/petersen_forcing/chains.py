"""Chain words: cyclic sequences of structures A/B (type 1) or C/D (type 2).

Structure footprints, laid down at column c:

    A  u_c u_{c+2}, u_{c+1} u_{c+3}, v_c v_{c+1}, v_{c+2} v_{c+3}        (4 columns)
    B  u_c v_c                                                          (1 column)
    C  u_c u_{c+2}, u_{c+1} v_{c+1}, v_{c+2} v_{c+3}                    (3 columns)
    D  u_c u_{c+2}, u_{c+1} u_{c+3}, v_{c+1} v_{c+2}, v_{c+3} v_{c+4}   (4 columns)

C and D occupy inner columns c.. and rim columns c+1.., so a type-2 word
tiles the pairs (u_s, v_{s+1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_generalized_petersen
from .matchings import MatchingType, PerfectMatching, classify, spoke_free_phase

WIDTH = {"A": 4, "B": 1, "C": 3, "D": 4}
ALPHABETS = ("AB", "CD")


class ChainParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnencodableMatching(ValueError):
    """Spoke-free matching on n not divisible by 4 (has no chain word)."""


@dataclass(frozen=True)
class ChainWord:
    letters: str
    anchor: int = 0

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty chain word")
        alpha = alphabet_of(self.letters)
        if alpha is None:
            raise ValueError(f"chain word {self.letters!r} mixes alphabets or has foreign letters")

    @property
    def alphabet(self) -> str:
        return alphabet_of(self.letters)

    @property
    def length(self) -> int:
        """Number of columns the word covers (= n of the host graph)."""
        return sum(WIDTH[c] for c in self.letters)

    def counts(self) -> dict[str, int]:
        return {c: self.letters.count(c) for c in self.alphabet}

    def expression(self) -> str:
        return format_chain(self.letters)

    def __str__(self) -> str:
        return self.letters


def alphabet_of(letters: str) -> str | None:
    present = set(letters)
    for alpha in ALPHABETS:
        if present <= set(alpha):
            return alpha
    return None


def format_chain(letters: str) -> str:
    """Run-length form, e.g. ``AABBBB`` -> ``A^2B^4``."""
    out = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        out.append(letters[i] if j - i == 1 else f"{letters[i]}^{j - i}")
        i = j
    return "".join(out)


def parse_chain_expression(text: str) -> ChainWord:
    """Parse ``expr := term+``, ``term := letter['^'int] | '(' expr ')'['^'int]``.

    Exponents may be written ``^3`` or ``^{3}``; whitespace is ignored.
    """
    src = text
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(src) and src[pos].isspace():
            pos += 1

    def exponent() -> int:
        nonlocal pos
        skip()
        if pos >= len(src) or src[pos] != "^":
            return 1
        pos += 1
        skip()
        braced = pos < len(src) and src[pos] == "{"
        if braced:
            pos += 1
        start = pos
        while pos < len(src) and src[pos].isdigit():
            pos += 1
        if start == pos:
            raise ChainParseError("expected an integer exponent", pos)
        value = int(src[start:pos])
        if braced:
            if pos >= len(src) or src[pos] != "}":
                raise ChainParseError("expected '}'", pos)
            pos += 1
        return value

    def expr(depth: int) -> str:
        nonlocal pos
        parts = []
        while True:
            skip()
            if pos >= len(src):
                break
            ch = src[pos]
            if ch == ")":
                if depth == 0:
                    raise ChainParseError("unbalanced ')'", pos)
                break
            if ch == "(":
                open_at = pos
                pos += 1
                inner = expr(depth + 1)
                skip()
                if pos >= len(src) or src[pos] != ")":
                    raise ChainParseError("missing ')' for '(' opened", open_at)
                pos += 1
                parts.append(inner * exponent())
            elif ch in WIDTH:
                pos += 1
                parts.append(ch * exponent())
            else:
                raise ChainParseError(f"unexpected character {ch!r}", pos)
        return "".join(parts)

    if not src.strip():
        raise ChainParseError("empty chain expression", 0)
    letters = expr(0)
    if not letters:
        raise ChainParseError("expression expands to an empty word", 0)
    seen = set()
    for i, ch in enumerate(src):
        if ch in WIDTH:
            seen.add(ch)
            if alphabet_of("".join(seen)) is None:
                raise ChainParseError(f"mixed alphabets: {ch!r} cannot follow {sorted(seen - {ch})}", i)
    return ChainWord(letters)


def period(word: ChainWord | str) -> int:
    letters = word.letters if isinstance(word, ChainWord) else word
    size = len(letters)
    if size == 0:
        raise ValueError("period of an empty word")
    for p in range(1, size + 1):
        if size % p == 0 and letters[p:] + letters[:p] == letters:
            return p
    return size


def structure_edges(g: Graph, letter: str, c: int) -> list[int]:
    u, v, eid = g.u, g.v, g.edge_id
    if letter == "A":
        pairs = [(u(c), u(c + 2)), (u(c + 1), u(c + 3)), (v(c), v(c + 1)), (v(c + 2), v(c + 3))]
    elif letter == "B":
        pairs = [(u(c), v(c))]
    elif letter == "C":
        pairs = [(u(c), u(c + 2)), (u(c + 1), v(c + 1)), (v(c + 2), v(c + 3))]
    elif letter == "D":
        pairs = [(u(c), u(c + 2)), (u(c + 1), u(c + 3)), (v(c + 1), v(c + 2)), (v(c + 3), v(c + 4))]
    else:
        raise ValueError(f"unknown structure {letter!r}")
    return [eid(a, b) for a, b in pairs]


def decode(word: ChainWord | str, n: int, anchor: int | None = None, graph: Graph | None = None) -> PerfectMatching:
    """Lay the structures of ``word`` left to right from ``anchor``."""
    if isinstance(word, str):
        word = parse_chain_expression(word)
    if anchor is None:
        anchor = word.anchor
    if word.length != n:
        raise ValueError(f"chain word covers {word.length} columns but n = {n}")
    g = graph if graph is not None else build_generalized_petersen(n, 2)
    if g.n != n or g.k != 2:
        raise ValueError("graph does not match n")
    col = anchor
    edges: set[int] = set()
    covered = 0
    for letter in word.letters:
        for e in structure_edges(g, letter, col):
            a, b = g.edges[e]
            bits = (1 << a) | (1 << b)
            if covered & bits or e in edges:
                raise ValueError(f"structures overlap when decoding {word.letters!r} on n={n}")
            covered |= bits
            edges.add(e)
        col += WIDTH[letter]
    if covered != g.all_vertices:
        raise ValueError(f"decoding {word.letters!r} does not cover P({n})")
    return PerfectMatching(g, frozenset(edges))


def structure_starts(m: PerfectMatching) -> list[tuple[int, str]]:
    """Columns where structures begin, with their letters, sorted by column."""
    g = m.graph
    n = g.n
    kind = classify(m)
    spokes = sorted(e for e in m.edges if e < n)
    starts: list[tuple[int, str]] = []
    if not spokes:
        if n % 4:
            raise UnencodableMatching(f"spoke-free matching on n={n}")
        s, _ = spoke_free_phase(m)
        letter = "A" if kind is MatchingType.TYPE1 else "D"
        starts = [((s + 4 * j) % n, letter) for j in range(n // 4)]
    elif kind is MatchingType.TYPE1:
        for idx, p in enumerate(spokes):
            nxt = spokes[(idx + 1) % len(spokes)]
            gap = (nxt - p - 1) % n
            starts.append((p, "B"))
            starts.extend(((p + 1 + 4 * j) % n, "A") for j in range(gap // 4))
    else:
        for idx, p in enumerate(spokes):
            nxt = spokes[(idx + 1) % len(spokes)]
            gap = (nxt - p - 1) % n
            starts.append(((p - 1) % n, "C"))
            starts.extend(((p + 2 + 4 * j) % n, "D") for j in range((gap - 2) // 4))
    starts.sort()
    return starts


def encode(m: PerfectMatching) -> ChainWord:
    """Chain word of a P(n, 2) matching, anchored at its smallest structure column."""
    starts = structure_starts(m)
    word = ChainWord("".join(letter for _, letter in starts), starts[0][0])
    if decode(word, m.graph.n, graph=m.graph).edges != m.edges:
        raise RuntimeError(f"chain encoding of {sorted(m.edges)} does not round-trip")
    return word


def rotations(word: ChainWord | str) -> list[str]:
    letters = word.letters if isinstance(word, ChainWord) else word
    return [letters[i:] + letters[:i] for i in range(period(letters))]
