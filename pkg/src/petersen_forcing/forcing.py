"""Forcing sets and forcing numbers of perfect matchings.

A subset S of a perfect matching M forces M when G - V(S) is empty or has M - S
as its only perfect matching, equivalently when S meets every M-alternating
cycle.  Uniqueness is decided by the cut-edge reduction (repeatedly delete
the ends of a bridge that cuts off an odd side); the forcing number is the
optimum of an implicit hitting-set loop over M-alternating cycles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph, bridge_sides, components, iter_bits
from .hitting_set import HittingSetSolver
from .matchings import PerfectMatching, count_perfect_matchings, iter_matching_edge_sets


class Reduction(enum.Enum):
    UNIQUE = "unique"
    NONE = "none"
    STUCK = "stuck"


def reduce_forced(g: Graph, alive: int | None = None) -> tuple[Reduction, int]:
    """Delete ends of forced edges until the graph is empty or no rule applies.

    Returns the outcome and the residual vertex mask.  ``STUCK`` means every
    remaining component is even and has no bridge with an odd side, so it has
    either no perfect matching or at least two.
    """
    if alive is None:
        alive = g.all_vertices
    nbr = g.nbr_mask
    while True:
        stack = [v for v in iter_bits(alive) if (nbr[v] & alive).bit_count() <= 1]
        while stack:
            v = stack.pop()
            if not (alive >> v) & 1:
                continue
            nb = nbr[v] & alive
            if nb == 0:
                return Reduction.NONE, alive
            if nb & (nb - 1):
                continue
            w = nb.bit_length() - 1
            alive &= ~((1 << v) | (1 << w))
            stack.extend(iter_bits(nbr[w] & alive))
        if not alive:
            return Reduction.UNIQUE, 0
        for comp in components(g, alive):
            if comp.bit_count() % 2:
                return Reduction.NONE, alive
        for e, side in bridge_sides(g, alive):
            if side.bit_count() % 2:
                a, b = g.edges[e]
                alive &= ~((1 << a) | (1 << b))
                break
        else:
            return Reduction.STUCK, alive


def has_unique_pm(g: Graph, alive: int | None = None) -> bool:
    return reduce_forced(g, alive)[0] is Reduction.UNIQUE


@dataclass(frozen=True)
class ForcingSet:
    matching: PerfectMatching
    edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)


def _residual(g: Graph, s: Iterable[int]) -> int:
    return g.all_vertices & ~g.edge_mask(s)


def is_forcing_set(g: Graph, m: PerfectMatching, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s <= m.edges:
        raise ValueError("forcing set candidate is not a subset of the matching")
    return has_unique_pm(g, _residual(g, s))


def find_second_pm(g: Graph, m: PerfectMatching, alive: int | None = None) -> PerfectMatching | frozenset | None:
    """First perfect matching in enumeration order that differs from ``m``.

    With ``alive`` given, searches the induced subgraph and compares against
    the part of ``m`` inside it; the result is then a bare edge set.
    """
    if alive is None:
        for edges in iter_matching_edge_sets(g):
            if frozenset(edges) != m.edges:
                return PerfectMatching(g, frozenset(edges))
        return None
    inside = frozenset(e for e in m.edges if (alive >> g.edges[e][0]) & 1)
    for edges in iter_matching_edge_sets(g, alive):
        if frozenset(edges) != inside:
            return frozenset(edges)
    return None


def _other_matching(g: Graph, m_edges: frozenset, alive: int) -> frozenset | None:
    """A perfect matching of ``g[alive]`` other than ``m_edges``, preferring
    ``m_edges`` at every branch so the difference stays local."""
    order = [v for v in g.branch_order if (alive >> v) & 1]
    size = len(order)
    inc = g.incidence
    ranked = [None] * g.num_vertices
    for v in order:
        own = [(w, e) for w, e in inc[v] if e in m_edges]
        ranked[v] = own + [(w, e) for w, e in inc[v] if e not in m_edges]
    uncovered = alive
    chosen: list[int] = []
    stack: list[list] = []
    pos = 0
    deviations = 0
    while True:
        while pos < size and not (uncovered >> order[pos]) & 1:
            pos += 1
        if pos == size:
            if deviations:
                return frozenset(chosen)
        else:
            v = order[pos]
            stack.append([pos, v, [(w, e) for w, e in ranked[v] if (uncovered >> w) & 1], 0])
        while stack:
            frame = stack[-1]
            fpos, v, cands, i = frame
            if i:
                w, e = cands[i - 1]
                uncovered |= (1 << v) | (1 << w)
                chosen.pop()
                if e not in m_edges:
                    deviations -= 1
            if i < len(cands):
                w, e = cands[i]
                frame[3] = i + 1
                uncovered &= ~((1 << v) | (1 << w))
                chosen.append(e)
                if e not in m_edges:
                    deviations += 1
                pos = fpos + 1
                break
            stack.pop()
        else:
            return None


# -- alternating cycles -----------------------------------------------------

@dataclass(frozen=True)
class AlternatingCycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out

    def matching_edges(self, m: PerfectMatching) -> frozenset[int]:
        return frozenset(e for e in self.edges if e in m.edges)


def _cycles_of_difference(g: Graph, a: frozenset, b: frozenset) -> list[AlternatingCycle]:
    diff = a ^ b
    at: dict[int, list[int]] = {}
    for e in diff:
        for x in g.edges[e]:
            at.setdefault(x, []).append(e)
    seen: set[int] = set()
    out = []
    for start in sorted(at):
        if start in seen:
            continue
        verts = [start]
        edges = []
        e = next(e for e in at[start] if e in a)
        cur = start
        while True:
            seen.add(cur)
            edges.append(e)
            x, y = g.edges[e]
            cur = y if x == cur else x
            if cur == start:
                break
            verts.append(cur)
            e = next(f for f in at[cur] if f != e)
        out.append(AlternatingCycle(tuple(verts), tuple(edges)))
    return out


def alternating_cycles_from_difference(m: PerfectMatching, m2: PerfectMatching | frozenset) -> list[AlternatingCycle]:
    """Decompose m xor m2 into vertex-disjoint m-alternating cycles."""
    other = m2.edges if isinstance(m2, PerfectMatching) else frozenset(m2)
    if isinstance(m2, PerfectMatching) and m2.graph is not m.graph:
        raise ValueError("matchings belong to different graphs")
    mine = m.edges
    if not isinstance(m2, PerfectMatching):
        covered = m.graph.edge_mask(other)
        mine = frozenset(e for e in mine if (covered >> m.graph.edges[e][0]) & 1)
    return _cycles_of_difference(m.graph, mine, other)


def enumerate_alternating_cycles(g: Graph, m: PerfectMatching, max_length: int | None = None,
                                 min_length: int = 0, alive: int | None = None) -> Iterator[AlternatingCycle]:
    """Every m-alternating cycle (each once), optionally length-bounded.

    Cycles are rooted at their smallest vertex and leave it along its
    matching edge, which fixes the traversal direction.
    """
    if alive is None:
        alive = g.all_vertices
    if max_length is None:
        max_length = g.num_vertices
    partner = m.partner()
    mate_edge = m.edge_at()
    inc = g.incidence
    for s in iter_bits(alive):
        t = partner[s]
        if t < s or not (alive >> t) & 1:
            continue
        path_v = [s, t]
        path_e = [mate_edge[s]]
        on_path = (1 << s) | (1 << t)
        # frames iterate non-matching edges out of the current path end
        stack = [iter(inc[t])]
        while stack:
            x = path_v[-1]
            advanced = False
            for y, e in stack[-1]:
                if e == mate_edge[x] or not (alive >> y) & 1 or y < s:
                    continue
                if y == s:
                    length = len(path_e) + 1
                    if min_length <= length <= max_length:
                        yield AlternatingCycle(tuple(path_v), tuple(path_e) + (e,))
                    continue
                if (on_path >> y) & 1 or len(path_e) + 3 > max_length:
                    continue
                z = partner[y]
                if z < s or (on_path >> z) & 1 or not (alive >> z) & 1:
                    continue
                path_v += [y, z]
                path_e += [e, mate_edge[y]]
                on_path |= (1 << y) | (1 << z)
                stack.append(iter(inc[z]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path_v) > 2:
                    y, z = path_v[-2], path_v[-1]
                    del path_v[-2:]
                    del path_e[-2:]
                    on_path &= ~((1 << y) | (1 << z))


# -- forcing number ---------------------------------------------------------

SEED_CYCLE_LENGTH = 10


def forcing_number(g: Graph, m: PerfectMatching, seed_length: int = SEED_CYCLE_LENGTH,
                   stats: dict | None = None) -> tuple[int, ForcingSet]:
    """Minimum forcing set size and a witness (lowest edge ids preferred).

    Implicit hitting set: solve the hitting-set problem over the alternating
    cycles collected so far; if the optimum does not force m, the residual
    graph yields alternating cycles it misses, and those join the family.
    """
    if m.graph is not g:
        raise ValueError("matching belongs to a different graph")
    m_edges = sorted(m.edges)
    local = {e: i for i, e in enumerate(m_edges)}

    def as_mask(cycle: AlternatingCycle) -> int:
        out = 0
        for e in cycle.edges:
            i = local.get(e)
            if i is not None:
                out |= 1 << i
        return out

    solver = HittingSetSolver(as_mask(c) for c in enumerate_alternating_cycles(g, m, max_length=seed_length))
    rounds = 0
    while True:
        rounds += 1
        size, chosen = solver.solve()
        s = [m_edges[i] for i in iter_bits(chosen)]
        status, rest = reduce_forced(g, _residual(g, s))
        if status is Reduction.UNIQUE:
            if stats is not None:
                stats.update(rounds=rounds, cycles=len(solver.family))
            return size, ForcingSet(m, frozenset(s))
        if status is Reduction.NONE:
            raise ValueError("edge set is not a perfect matching of the graph")
        found = []
        for comp in components(g, rest):
            other = _other_matching(g, m.edges, comp)
            if other is None:
                raise ValueError("edge set is not a perfect matching of the graph")
            inside = frozenset(e for e in m.edges if (comp >> g.edges[e][0]) & 1)
            found.extend(_cycles_of_difference(g, inside, other))
        solver.add(as_mask(c) for c in found)


def forcing_number_oracle(g: Graph, m: PerfectMatching, max_size: int = 24) -> int:
    """Brute force: smallest subset S of m with a unique perfect matching of
    G - V(S), uniqueness decided by counting matchings (up to two)."""
    if len(m) > max_size:
        raise ValueError(f"matching has {len(m)} edges; oracle limited to {max_size}")
    edges = sorted(m.edges)
    for size in range(len(edges) + 1):
        for s in combinations(edges, size):
            if count_perfect_matchings(g, _residual(g, s), limit=2) == 1:
                return size
    raise ValueError("edge set is not a perfect matching of the graph")


@dataclass(frozen=True)
class CyclePacking:
    value: int
    exact: bool
    pool_size: int


def max_disjoint_alternating_cycles(g: Graph, m: PerfectMatching, pool_cap: int | None = None,
                                    max_length: int | None = None) -> CyclePacking:
    """Maximum number of vertex-disjoint m-alternating cycles.

    The cycle pool is collected shortest-first up to ``pool_cap`` cycles
    (default 10 per column) of length at most ``max_length`` (default all
    vertices).  A capped pool still gives an exact answer when the packing
    meets the trivial bound ``|V| // shortest cycle length``.
    """
    scale = g.n if g.n is not None else g.num_vertices // 2
    if pool_cap is None:
        pool_cap = 10 * scale
    if max_length is None:
        max_length = g.num_vertices
    pool: list[int] = []
    truncated = False
    for length in range(4, max_length + 1, 2):
        batch = [c.vertex_mask for c in enumerate_alternating_cycles(g, m, max_length=length, min_length=length)]
        if len(pool) + len(batch) > pool_cap:
            pool.extend(batch[: pool_cap - len(pool)])
            truncated = True
            break
        pool.extend(batch)
    if not pool:
        return CyclePacking(0, not truncated, 0)
    shortest = min(p.bit_count() for p in pool)
    ceiling = g.num_vertices // shortest
    best = 0

    def grow(idx: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if best == ceiling:
            return
        free = (g.all_vertices & ~used).bit_count()
        if count + free // shortest <= best:
            return
        for j in range(idx, len(pool)):
            if not pool[j] & used:
                grow(j + 1, used | pool[j], count + 1)
                if best == ceiling:
                    return

    grow(0, 0, 0)
    return CyclePacking(best, (not truncated) or best == ceiling, len(pool))
