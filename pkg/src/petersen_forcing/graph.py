"""Generalized Petersen graphs P(n, k) and small general graphs.

Vertices are integers; for P(n, k) the inner vertex u_i is ``i`` and the
rim vertex v_i is ``n + i``.  Edge ids index into ``Graph.edges``; for
P(n, k) the table holds the n spokes first (edge ``i`` is u_i v_i), then
the rim edges v_i v_{i+1}, then the inner edges u_i u_{i+k}.

Vertex subsets are passed around as int bitmasks (bit ``v`` set means
vertex ``v`` is present).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True, eq=False)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    n: int | None = None
    k: int | None = None
    # per-vertex tuple of (neighbor, edge id), in edge-table order
    incidence: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, default=())
    nbr_mask: tuple[int, ...] = field(repr=False, default=())
    edge_index: dict = field(repr=False, default_factory=dict)
    # vertex order used by backtracking searches
    branch_order: tuple[int, ...] = field(repr=False, default=())

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return (1 << self.num_vertices) - 1

    @property
    def is_petersen2(self) -> bool:
        return self.k == 2 and self.n is not None

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + i % self.n

    def edge_id(self, a: int, b: int) -> int:
        """Edge id of the pair {a, b}; KeyError if absent."""
        return self.edge_index[(a, b) if a < b else (b, a)]

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edge_index

    def is_spoke(self, e: int) -> bool:
        return self.n is not None and e < self.n

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.incidence[v]]

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def edge_mask(self, edge_ids: Iterable[int]) -> int:
        """Vertex bitmask covered by the given edges."""
        mask = 0
        for e in edge_ids:
            a, b = self.edges[e]
            mask |= (1 << a) | (1 << b)
        return mask

    def label(self, v: int) -> str:
        if self.n is None:
            return str(v)
        return f"u{v}" if v < self.n else f"v{v - self.n}"

    def to_edge_list(self) -> str:
        return "".join(f"{a} {b}\n" for a, b in self.edges)


def _make_graph(num_vertices: int, pairs: Sequence[tuple[int, int]], n=None, k=None,
                branch_order=None) -> Graph:
    edges: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for a, b in pairs:
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if not (0 <= a < num_vertices and 0 <= b < num_vertices):
            raise ValueError(f"edge ({a}, {b}) out of range for {num_vertices} vertices")
        key = (a, b) if a < b else (b, a)
        if key in index:
            continue
        index[key] = len(edges)
        edges.append(key)
    incidence: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
    for e, (a, b) in enumerate(edges):
        incidence[a].append((b, e))
        incidence[b].append((a, e))
    nbr_mask = tuple(sum(1 << w for w, _ in inc) for inc in incidence)
    if branch_order is None:
        branch_order = tuple(range(num_vertices))
    return Graph(
        num_vertices=num_vertices,
        edges=tuple(edges),
        n=n,
        k=k,
        incidence=tuple(tuple(inc) for inc in incidence),
        nbr_mask=nbr_mask,
        edge_index=index,
        branch_order=tuple(branch_order),
    )


def build_generalized_petersen(n: int, k: int = 2) -> Graph:
    """P(n, k) as a simple graph; parallel inner edges (n = 2k) are stored once."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [1, {n - 1}], got {k}")
    pairs = [(i, n + i) for i in range(n)]
    pairs += [(n + i, n + (i + 1) % n) for i in range(n)]
    pairs += [(i, (i + k) % n) for i in range(n)]
    # column-interleaved order keeps the backtracking frontier narrow
    order = [x for i in range(n) for x in (i, n + i)]
    return _make_graph(2 * n, pairs, n=n, k=k, branch_order=order)


def build_from_edge_list(pairs: Iterable[tuple[int, int]], num_vertices: int | None = None) -> Graph:
    pairs = [(int(a), int(b)) for a, b in pairs]
    if num_vertices is None:
        num_vertices = 1 + max((max(a, b) for a, b in pairs), default=-1)
    for a, b in pairs:
        if a < 0 or b < 0:
            raise ValueError(f"negative vertex in edge ({a}, {b})")
    return _make_graph(num_vertices, pairs)


def parse_edge_list(text: str) -> Graph:
    """Inverse of ``Graph.to_edge_list``: one ``u v`` pair per line, 0-based."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two vertex ids, got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return build_from_edge_list(pairs)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(g: Graph, alive: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as bitmasks."""
    if alive is None:
        alive = g.all_vertices
    comps = []
    rest = alive
    nbr = g.nbr_mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            grow &= alive & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


def components_with_parity(g: Graph, removed_vertices: Iterable[int] = ()) -> list[tuple[frozenset[int], str]]:
    alive = g.all_vertices
    for v in removed_vertices:
        alive &= ~(1 << v)
    out = []
    for comp in components(g, alive):
        verts = frozenset(iter_bits(comp))
        out.append((verts, "odd" if len(verts) % 2 else "even"))
    return out


def bridge_sides(g: Graph, alive: int | None = None) -> list[tuple[int, int]]:
    """All bridges of the induced subgraph as ``(edge id, child-side vertex mask)``.

    The child side is the vertex set cut off from the DFS root by the bridge.
    Iterative Tarjan low-link.
    """
    if alive is None:
        alive = g.all_vertices
    inc = g.incidence
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    side: dict[int, int] = {}
    out: list[tuple[int, int]] = []
    counter = 0
    for root in iter_bits(alive):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        side[root] = 1 << root
        counter += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge or not (alive >> w) & 1:
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = counter
                    side[w] = 1 << w
                    counter += 1
                    stack.append((w, e, iter(inc[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                side[p] |= side[v]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] > disc[p]:
                    out.append((parent_edge, side[v]))
    return out


def bridges(g: Graph, alive: int | None = None) -> set[int]:
    """Edge ids whose removal increases the number of connected components."""
    return {e for e, _ in bridge_sides(g, alive)}
