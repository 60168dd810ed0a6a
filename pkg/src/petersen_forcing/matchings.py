"""Perfect matchings: enumeration, two-type classification of P(n, 2)
matchings, closed-form type counts and dihedral canonical forms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .graph import Graph


class MatchingType(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class PerfectMatching:
    graph: Graph = field(repr=False)
    edges: frozenset[int]

    @classmethod
    def from_edges(cls, g: Graph, edges: Iterable[int]) -> "PerfectMatching":
        edges = frozenset(int(e) for e in edges)
        check_perfect_matching(g, edges)
        return cls(g, edges)

    @property
    def mask(self) -> int:
        out = 0
        for e in self.edges:
            out |= 1 << e
        return out

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)

    def partner(self) -> dict[int, int]:
        """vertex -> matched vertex"""
        out = {}
        for e in self.edges:
            a, b = self.graph.edges[e]
            out[a] = b
            out[b] = a
        return out

    def edge_at(self) -> dict[int, int]:
        """vertex -> id of the matching edge covering it"""
        out = {}
        for e in self.edges:
            a, b = self.graph.edges[e]
            out[a] = e
            out[b] = e
        return out

    def __len__(self) -> int:
        return len(self.edges)


def check_perfect_matching(g: Graph, edges: Iterable[int], alive: int | None = None) -> None:
    if alive is None:
        alive = g.all_vertices
    covered = 0
    for e in edges:
        if not 0 <= e < g.num_edges:
            raise ValueError(f"edge id {e} out of range")
        a, b = g.edges[e]
        bits = (1 << a) | (1 << b)
        if covered & bits:
            raise ValueError(f"edge {e} = {g.edges[e]} overlaps another matching edge")
        covered |= bits
    if covered != alive:
        raise ValueError("edge set does not cover every vertex")


def is_perfect_matching(g: Graph, edges: Iterable[int], alive: int | None = None) -> bool:
    try:
        check_perfect_matching(g, edges, alive)
    except ValueError:
        return False
    return True


def iter_matching_edge_sets(g: Graph, alive: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the edge-id tuples of all perfect matchings of the induced subgraph.

    Branches on the first uncovered vertex of ``g.branch_order`` and tries its
    incident edges in edge-table order.
    """
    if alive is None:
        alive = g.all_vertices
    order = [v for v in g.branch_order if (alive >> v) & 1]
    size = len(order)
    if size % 2:
        return
    inc = g.incidence
    uncovered = alive
    chosen: list[int] = []
    stack: list[list] = []
    pos = 0
    while True:
        while pos < size and not (uncovered >> order[pos]) & 1:
            pos += 1
        if pos == size:
            yield tuple(chosen)
        else:
            v = order[pos]
            cands = [(w, e) for w, e in inc[v] if (uncovered >> w) & 1]
            stack.append([pos, v, cands, 0])
        while stack:
            frame = stack[-1]
            fpos, v, cands, i = frame
            if i:
                w, _ = cands[i - 1]
                uncovered |= (1 << v) | (1 << w)
                chosen.pop()
            if i < len(cands):
                w, e = cands[i]
                frame[3] = i + 1
                uncovered &= ~((1 << v) | (1 << w))
                chosen.append(e)
                pos = fpos + 1
                break
            stack.pop()
        else:
            return


def enumerate_perfect_matchings(g: Graph) -> Iterator[PerfectMatching]:
    for edges in iter_matching_edge_sets(g):
        yield PerfectMatching(g, frozenset(edges))


def count_perfect_matchings(g: Graph, alive: int | None = None, limit: int | None = None) -> int:
    count = 0
    for _ in iter_matching_edge_sets(g, alive):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


# -- classification ---------------------------------------------------------

def _require_p2(g: Graph) -> int:
    if not g.is_petersen2:
        raise ValueError("expected a generalized Petersen graph P(n, 2)")
    return g.n


def spoke_free_phase(m: PerfectMatching) -> tuple[int, int]:
    """For a spoke-free matching of P(n, 2): ``(s, r)`` where the inner edges
    start at columns s and s+1 (mod 4) and the rim edges start at parity r."""
    g = m.graph
    n = g.n
    e = 0 if g.edge_id(g.u(0), g.u(2)) in m.edges else 2
    o = 1 if g.edge_id(g.u(1), g.u(3)) in m.edges else 3
    s = e if (o - e) % 4 == 1 else o
    r = 0 if g.edge_id(g.v(0), g.v(1)) in m.edges else 1
    return s, r


def spoke_gaps(m: PerfectMatching) -> list[int]:
    """Number of non-matching spokes strictly between consecutive matching spokes."""
    n = m.graph.n
    spokes = sorted(e for e in m.edges if e < n)
    return [(spokes[(i + 1) % len(spokes)] - spokes[i] - 1) % n for i in range(len(spokes))]


def classify(m: PerfectMatching) -> MatchingType:
    n = _require_p2(m.graph)
    gaps = spoke_gaps(m)
    if not gaps:
        if n % 4:
            raise RuntimeError("spoke-free perfect matching with n not divisible by 4")
        s, r = spoke_free_phase(m)
        return MatchingType.TYPE1 if r == s % 2 else MatchingType.TYPE2
    residues = {gap % 4 for gap in gaps}
    if residues == {0}:
        return MatchingType.TYPE1
    if residues == {2}:
        return MatchingType.TYPE2
    raise RuntimeError(f"inconsistent spoke gaps {gaps}: not a valid perfect matching")


# -- closed-form counts -----------------------------------------------------

def _necklace_sum(n: int, step: int) -> int:
    # sum over l of n/(l+(n-step*l)/4) * C(l+(n-step*l)/4, l)
    total = 0
    for l in range(n // step + 1):
        rest = n - step * l
        if rest % 4:
            continue
        t = l + rest // 4
        num = n * comb(t, l)
        assert num % t == 0, (n, l)
        total += num // t
    return total


def count_type1(n: int) -> int:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n == 4:
        return 2
    return _necklace_sum(n, 1)


def count_type2(n: int) -> int:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n == 4:
        return 1
    return _necklace_sum(n, 3)


# -- dihedral symmetry ------------------------------------------------------

def _vertex_map(n: int, t: int, reflect: bool):
    def f(x: int) -> int:
        if x < n:
            i = (-x + t) % n if reflect else (x + t) % n
            return i
        i = x - n
        return n + ((-i + t) % n if reflect else (i + t) % n)
    return f


@lru_cache(maxsize=64)
def dihedral_edge_maps(g: Graph) -> tuple[tuple[int, ...], ...]:
    """The 2n edge permutations induced by rotations and reflections of P(n, k)."""
    n = g.n
    if n is None:
        raise ValueError("dihedral symmetry is defined for generalized Petersen graphs only")
    maps = []
    for reflect in (False, True):
        for t in range(n):
            f = _vertex_map(n, t, reflect)
            maps.append(tuple(g.edge_id(f(a), f(b)) for a, b in g.edges))
    return tuple(maps)


def apply_edge_map(m: PerfectMatching, emap: tuple[int, ...]) -> PerfectMatching:
    return PerfectMatching(m.graph, frozenset(emap[e] for e in m.edges))


def rotate(m: PerfectMatching, t: int) -> PerfectMatching:
    return apply_edge_map(m, dihedral_edge_maps(m.graph)[t % m.graph.n])


def reflect(m: PerfectMatching, t: int = 0) -> PerfectMatching:
    """Image under i -> t - i on both rims."""
    n = m.graph.n
    return apply_edge_map(m, dihedral_edge_maps(m.graph)[n + t % n])


def _lex_key(edges: Iterable[int], num_edges: int) -> int:
    # integer order of this key equals lexicographic order of the bit-vector b_0 b_1 ...
    top = num_edges - 1
    key = 0
    for e in edges:
        key |= 1 << (top - e)
    return key


def canonical_key(m: PerfectMatching) -> int:
    ne = m.graph.num_edges
    return min(_lex_key((emap[e] for e in m.edges), ne) for emap in dihedral_edge_maps(m.graph))


def canonicalize_dihedral(m: PerfectMatching) -> PerfectMatching:
    ne = m.graph.num_edges
    best = None
    best_key = None
    for emap in dihedral_edge_maps(m.graph):
        image = [emap[e] for e in m.edges]
        key = _lex_key(image, ne)
        if best_key is None or key < best_key:
            best_key, best = key, image
    return PerfectMatching(m.graph, frozenset(best))


def orbit(m: PerfectMatching) -> set[frozenset[int]]:
    return {frozenset(emap[e] for e in m.edges) for emap in dihedral_edge_maps(m.graph)}


# -- census -----------------------------------------------------------------

@dataclass
class OrbitClass:
    representative: PerfectMatching
    size: int
    kind: MatchingType | None = None


@dataclass
class MatchingCensus:
    n: int
    type1: int
    type2: int
    total: int
    classes: list[OrbitClass] = field(default_factory=list)


def dihedral_classes(g: Graph, limit: int | None = None) -> list[OrbitClass]:
    """Group all perfect matchings of P(n, k) into dihedral orbits.

    Raises ``BudgetExceeded`` once more than ``limit`` orbits have been seen.
    """
    maps = dihedral_edge_maps(g)
    ne = g.num_edges
    top = ne - 1
    seen: dict[int, list] = {}
    for edges in iter_matching_edge_sets(g):
        key = None
        best = None
        for emap in maps:
            k = 0
            for e in edges:
                k |= 1 << (top - emap[e])
            if key is None or k < key:
                key, best = k, emap
        slot = seen.get(key)
        if slot is None:
            if limit is not None and len(seen) >= limit:
                raise BudgetExceeded(f"more than {limit} dihedral classes", progress=len(seen))
            seen[key] = [frozenset(best[e] for e in edges), 1]
        else:
            slot[1] += 1
    out = []
    for key in sorted(seen):
        edges, size = seen[key]
        out.append(OrbitClass(PerfectMatching(g, edges), size))
    return out


def census(n: int, with_classes: bool = False) -> MatchingCensus:
    from .graph import build_generalized_petersen

    g = build_generalized_petersen(n, 2)
    counts = {MatchingType.TYPE1: 0, MatchingType.TYPE2: 0}
    classes = []
    if with_classes:
        for oc in dihedral_classes(g):
            oc.kind = classify(oc.representative)
            counts[oc.kind] += oc.size
            classes.append(oc)
    else:
        for m in enumerate_perfect_matchings(g):
            counts[classify(m)] += 1
    t1, t2 = counts[MatchingType.TYPE1], counts[MatchingType.TYPE2]
    return MatchingCensus(n, t1, t2, t1 + t2, classes)


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, progress=None):
        super().__init__(message)
        self.progress = progress
