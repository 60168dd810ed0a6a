"""Closed-form extremal values, explicit extremal matchings and the local
flips that connect matchings of neighbouring forcing numbers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .chains import ChainWord, decode, parse_chain_expression, structure_edges, structure_starts
from .graph import Graph, build_generalized_petersen
from .matchings import MatchingType, PerfectMatching, classify


class Claim(enum.Enum):
    NOT_CLAIMED = "not claimed"

    def __repr__(self) -> str:
        return "NOT_CLAIMED"


NOT_CLAIMED = Claim.NOT_CLAIMED


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- formula catalog --------------------------------------------------------

def type1_max(n: int):
    return _ceil_div(n, 4) if n >= 9 else NOT_CLAIMED


def type1_min(n: int):
    return _ceil_div(n + 2, 6) if n >= 11 else NOT_CLAIMED


def delta(n: int) -> int:
    return 1 if n % 7 == 3 else 0


def type2_max(n: int):
    return _ceil_div(n + 3, 7) + delta(n) if n >= 34 else NOT_CLAIMED


def type2_min(n: int):
    return _ceil_div(n, 12) + 1 if n >= 11 else NOT_CLAIMED


def eta(d: int) -> int:
    return 9 if d % 2 == 0 else 12


def xi(d: int, c: int) -> int:
    return 1 if (d == 0 and c % 4 == 1) or (d == 1 and c % 4 == 2) else 0


def dc_closed_form(d: int, c: int) -> int:
    """Forcing number of the type-2 matching D^d C^c on P(3c + 4d)."""
    if d < 0 or c < 0 or 3 * c + 4 * d < 3:
        raise ValueError(f"(d, c) = ({d}, {c}) does not describe a matching of some P(n, 2)")
    return _ceil_div(6 * d + 3 * c + eta(d), 12) + xi(d, c)


def dc_pairs(n: int) -> list[tuple[int, int]]:
    return [(d, (n - 4 * d) // 3) for d in range(n // 4 + 1) if (n - 4 * d) % 3 == 0]


def spectrum_formula(n: int):
    """``((type-2 min, type-2 max), (type-1 min, type-1 max))`` for n >= 34."""
    if n < 34:
        return NOT_CLAIMED
    return (type2_min(n), type2_max(n)), (type1_min(n), type1_max(n))


def has_gap(n: int, reference=None) -> bool:
    """Whether the forcing spectrum of P(n, 2) misses an integer between its ends.

    n >= 34 uses the interval formulas; smaller n reads the supports of the
    reference polynomials (``reference`` maps n to a ForcingPolynomial and
    defaults to the shipped table).
    """
    if n >= 34:
        return type1_min(n) > type2_max(n) + 1
    if n < 3:
        raise ValueError("n must be >= 3")
    if reference is None:
        from . import table1
        poly = table1.reference(n)
    else:
        poly = reference[n]
    vals = sorted(e for e, c in poly.total.items() if c)
    return vals[-1] - vals[0] + 1 != len(vals)


# -- extremal recipes -------------------------------------------------------

class Extremal(enum.Enum):
    T1MAX = "t1max"
    T1MIN = "t1min"
    T2MAX = "t2max"
    T2MIN = "t2min"


T1MIN_HEADS = {
    11: "BBBAA", 0: "BBBBAA", 1: "BBBBBAA", 2: "BBBBBBAA", 3: "BABABA", 4: "BBBBBBBABA",
    5: "BBBBBAAA", 6: "BBBBBBAAA", 7: "AABBBAA", 8: "BAABBBAA", 9: "BBAABBBAA", 10: "BBBAABBBAA",
}
T2MAX_HEADS = {6: "CCCD", 0: "CDCD", 1: "DDCD", 2: "CCCCD", 3: "CCDCD", 4: "DCDCD"}
T2MIN_HEADS = {
    11: "CDD", 0: "CCCC", 1: "CCCD", 2: "CCDD", 3: "CCCCC", 4: "CCCCD",
    5: "CCCDD", 6: "CCCCCC", 7: "CCCCCD", 8: "CCCCDD", 9: "CCCCCCC", 10: "CDDCDD",
}
VALID_FROM = {Extremal.T1MAX: 9, Extremal.T1MIN: 11, Extremal.T2MAX: 34, Extremal.T2MIN: 11}


@dataclass(frozen=True)
class ExtremalRecipe:
    n: int
    which: Extremal | str
    residue: int | None
    expression: str
    word: ChainWord
    forcing_set: frozenset[int] | None = None

    @cached_property
    def graph(self) -> Graph:
        return build_generalized_petersen(self.n, 2)

    @cached_property
    def matching(self) -> PerfectMatching:
        return decode(self.word, self.n, graph=self.graph)

    @property
    def kind(self) -> MatchingType:
        return MatchingType.TYPE1 if self.word.alphabet == "AB" else MatchingType.TYPE2

    def check(self) -> None:
        m = self.matching
        if classify(m) is not self.kind:
            raise AssertionError(f"{self.expression} decodes to a matching of the wrong type")
        counts = self.word.counts()
        size = 4 * counts["A"] + counts["B"] if self.kind is MatchingType.TYPE1 else 3 * counts["C"] + 4 * counts["D"]
        if size != self.n:
            raise AssertionError(f"{self.expression}: letter counts give {size}, not {self.n}")
        if self.forcing_set is not None and not self.forcing_set <= m.edges:
            raise AssertionError("explicit forcing set is not inside the matching")


def _recipe(n, which, residue, expression, anchor=0, forcing_set=None) -> ExtremalRecipe:
    word = parse_chain_expression(expression)
    if word.length != n:
        raise ValueError(f"{expression} covers {word.length} columns, expected {n}")
    return ExtremalRecipe(n, which, residue, expression, ChainWord(word.letters, anchor), forcing_set)


def build_extremal(n: int, which: Extremal | str) -> ExtremalRecipe:
    which = Extremal(which)
    if n < VALID_FROM[which]:
        raise ValueError(f"{which.value} construction is claimed for n >= {VALID_FROM[which]}, got n={n}")
    if which is Extremal.T1MAX:
        return _recipe(n, which, None, f"B^{n}", forcing_set=frozenset(4 * i for i in range(_ceil_div(n, 4))))
    if which is Extremal.T1MIN:
        r = n % 12
        return _recipe(n, which, r, f"{T1MIN_HEADS[r]}(BBBABA)^{(n - 11) // 12}")
    if which is Extremal.T2MIN:
        r = n % 12
        return _recipe(n, which, r, f"{T2MIN_HEADS[r]}(CCCC)^{(n - 11) // 12}")
    r = n % 7
    if r == 5:
        return _recipe(n, which, r, f"CDCCDCCDCCDC(DC)^{(n - 40) // 7}")
    return _recipe(n, which, r, f"{T2MAX_HEADS[r]}(CD)^{(n - 13) // 7}")


def d_only_recipe(n: int) -> ExtremalRecipe:
    """D^{n/4} with the explicit forcing set {u_{n-1}u_1, v_2v_3, u_{8i+4}u_{8i+6}}."""
    if n % 4 or n < 12:
        raise ValueError("needs n divisible by 4 and n >= 12")
    g = build_generalized_petersen(n, 2)
    u, v = g.u, g.v
    pairs = [(u(n - 1), u(1)), (v(2), v(3))] + [(u(8 * i + 4), u(8 * i + 6)) for i in range((n - 12) // 8 + 1)]
    s = frozenset(g.edge_id(a, b) for a, b in pairs)
    return _recipe(n, "t2max-case1", None, f"D^{n // 4}", anchor=n - 1, forcing_set=s)


def one_c_recipe(n: int) -> ExtremalRecipe:
    """C D^{(n-3)/4} with the explicit set {u_{n-1}u_1, u_0v_0, u_{8i-1}u_{8i+1}}."""
    if n % 4 != 3 or n < 7:
        raise ValueError("needs n = 3 mod 4 and n >= 7")
    g = build_generalized_petersen(n, 2)
    u, v = g.u, g.v
    pairs = [(u(n - 1), u(1)), (u(0), v(0))] + [(u(8 * i - 1), u(8 * i + 1)) for i in range(1, (n - 7) // 8 + 1)]
    s = frozenset(g.edge_id(a, b) for a, b in pairs)
    return _recipe(n, "t2max-case2", None, f"CD^{(n - 3) // 4}", anchor=n - 1, forcing_set=s)


def exceptional_t2_recipe(n: int) -> ExtremalRecipe:
    """C(CD)^{(n-3)/7}: the only type-2 matching whose forcing number gets the +1 bump."""
    if n % 7 != 3:
        raise ValueError("needs n = 3 mod 7")
    return _recipe(n, "t2max-exceptional", 3, f"C(CD)^{(n - 3) // 7}")


# -- flips ------------------------------------------------------------------

def flip_cycle(m: PerfectMatching, vertex_cycle: list[int]) -> PerfectMatching:
    """Symmetric difference of m with an m-alternating cycle given by its vertices."""
    g = m.graph
    edges = [g.edge_id(vertex_cycle[i], vertex_cycle[(i + 1) % len(vertex_cycle)]) for i in range(len(vertex_cycle))]
    inside = [e in m.edges for e in edges]
    if len(edges) % 2 or any(inside[i] == inside[i + 1] for i in range(-1, len(edges) - 1)):
        raise ValueError("cycle is not alternating with respect to the matching")
    return PerfectMatching(g, m.edges.symmetric_difference(edges))


def _has_structure(m: PerfectMatching, letter: str, col: int) -> bool:
    return all(e in m.edges for e in structure_edges(m.graph, letter, col))


def chain_columns(m: PerfectMatching, pattern: str) -> list[int]:
    """Columns where the cyclic chain word of m contains ``pattern``."""
    starts = structure_starts(m)
    letters = "".join(c for _, c in starts)
    size = len(letters)
    if len(pattern) > size:
        return []
    ring = letters * 2
    return [starts[i][0] for i in range(size) if ring[i:i + len(pattern)] == pattern]


def _ba_cycle(g: Graph, i: int) -> list[int]:
    u, v = g.u, g.v
    return [u(i + 1), u(i + 3), v(i + 3), v(i + 4), u(i + 4), u(i + 2), v(i + 2), v(i + 1)]


def transform_ba_to_b5(m: PerfectMatching, i: int) -> PerfectMatching:
    """Replace the chain BA starting at column i by B^5 (one 8-cycle flip)."""
    if not (_has_structure(m, "B", i) and _has_structure(m, "A", i + 1)):
        raise ValueError(f"no chain BA at column {i}")
    return flip_cycle(m, _ba_cycle(m.graph, i))


def transform_b5_to_ba(m: PerfectMatching, i: int) -> PerfectMatching:
    if not all(_has_structure(m, "B", i + t) for t in range(5)):
        raise ValueError(f"no chain B^5 at column {i}")
    return flip_cycle(m, _ba_cycle(m.graph, i))


def _cd_cycle(g: Graph, i: int) -> list[int]:
    u, v = g.u, g.v
    return [u(i + 1), u(i + 3), u(i + 5), v(i + 5), v(i + 4), v(i + 3), v(i + 2), v(i + 1)]


def transform_cd_to_dc(m: PerfectMatching, i: int) -> PerfectMatching:
    """Replace the chain CD starting at column i by DC."""
    if not (_has_structure(m, "C", i) and _has_structure(m, "D", i + 3)):
        raise ValueError(f"no chain CD at column {i}")
    return flip_cycle(m, _cd_cycle(m.graph, i))


def transform_dc_to_cd(m: PerfectMatching, i: int) -> PerfectMatching:
    if not (_has_structure(m, "D", i) and _has_structure(m, "C", i + 4)):
        raise ValueError(f"no chain DC at column {i}")
    return flip_cycle(m, _cd_cycle(m.graph, i))


def _c4_cycle(g: Graph, j: int) -> list[int]:
    u, v = g.u, g.v
    return [u(j + 1), u(j + 3), u(j + 5), u(j + 7), v(j + 7), v(j + 8), v(j + 9), v(j + 10),
            u(j + 10), u(j + 8), u(j + 6), u(j + 4), v(j + 4), v(j + 3), v(j + 2), v(j + 1)]


def transform_c4_to_d3(m: PerfectMatching, j: int) -> PerfectMatching:
    """Replace the chain C^4 starting at column j by D^3 (one 16-cycle flip)."""
    if not all(_has_structure(m, "C", j + 3 * t) for t in range(4)):
        raise ValueError(f"no chain C^4 at column {j}")
    return flip_cycle(m, _c4_cycle(m.graph, j))


def transform_d3_to_c4(m: PerfectMatching, j: int) -> PerfectMatching:
    if not all(_has_structure(m, "D", j + 4 * t) for t in range(3)):
        raise ValueError(f"no chain D^3 at column {j}")
    return flip_cycle(m, _c4_cycle(m.graph, j))
