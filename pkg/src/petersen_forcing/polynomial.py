"""Forcing polynomials and spectra, summed over dihedral orbit representatives."""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .forcing import forcing_number
from .graph import Graph, build_generalized_petersen
from .matchings import (
    BudgetExceeded,
    MatchingType,
    OrbitClass,
    PerfectMatching,
    classify,
    dihedral_classes,
    iter_matching_edge_sets,
)

DEFAULT_BUDGET = 200_000

Coefficients = dict[int, int]


def format_polynomial(coeffs: Coefficients) -> str:
    """``{3: 1, 2: 18}`` -> ``x^3+18x^2``; the zero polynomial is ``0``."""
    terms = []
    for exp in sorted(coeffs, reverse=True):
        c = coeffs[exp]
        if c == 0:
            continue
        if exp == 0:
            terms.append(str(c))
            continue
        mono = "x" if exp == 1 else f"x^{exp}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def parse_polynomial(text: str) -> Coefficients:
    text = text.strip().strip("()").replace(" ", "")
    if text == "0":
        return {}
    out: Coefficients = {}
    for term in text.split("+"):
        match = _TERM.match(term)
        if not match or not term:
            raise ValueError(f"bad polynomial term {term!r}")
        coeff, mono, exp = match.groups()
        c = int(coeff) if coeff else 1
        e = 0 if not mono else int(exp) if exp else 1
        out[e] = out.get(e, 0) + c
    return out


@dataclass
class ForcingPolynomial:
    total: Coefficients
    type1: Coefficients | None = None
    type2: Coefficients | None = None
    n: int | None = None

    @property
    def matching_count(self) -> int:
        return sum(self.total.values())

    def split(self) -> str:
        """Table-style ``(type-1)+(type-2)`` rendering."""
        return f"({format_polynomial(self.type1 or {})})+({format_polynomial(self.type2 or {})})"

    def to_json(self) -> dict:
        def pairs(c):
            return [[e, c[e]] for e in sorted(c, reverse=True)] if c is not None else None
        return {"n": self.n, "total": pairs(self.total), "type1": pairs(self.type1), "type2": pairs(self.type2)}

    @classmethod
    def from_json(cls, data: dict) -> "ForcingPolynomial":
        def coeffs(p):
            return None if p is None else {int(e): int(c) for e, c in p}
        return cls(coeffs(data["total"]), coeffs(data.get("type1")), coeffs(data.get("type2")), data.get("n"))

    def csv_rows(self) -> list[tuple]:
        """Rows ``(n, type, exponent, coefficient)``; type is 1, 2 or ``all``."""
        rows = []
        parts = [(1, self.type1), (2, self.type2)] if self.type1 is not None else [("all", self.total)]
        for tag, coeffs in parts:
            for e in sorted(coeffs, reverse=True):
                rows.append((self.n, tag, e, coeffs[e]))
        return rows


@dataclass
class Spectrum:
    values: tuple[int, ...]
    type1: tuple[int, ...] | None = None
    type2: tuple[int, ...] | None = None

    def is_interval(self) -> bool:
        return is_integer_interval(self.values)


def is_integer_interval(values) -> bool:
    vals = sorted(set(values))
    return not vals or vals[-1] - vals[0] + 1 == len(vals)


@dataclass
class SweepItem:
    representative: PerfectMatching
    size: int
    kind: MatchingType | None
    forcing: int | None = None
    witness: tuple[int, ...] = field(default=())


@lru_cache(maxsize=8)
def _petersen(n: int, k: int) -> Graph:
    return build_generalized_petersen(n, k)


def _worker(args):
    n, k, edges = args
    g = _petersen(n, k)
    f, s = forcing_number(g, PerfectMatching(g, frozenset(edges)))
    return f, tuple(sorted(s.edges))


def sweep(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[SweepItem]:
    """Forcing number of one representative per symmetry class.

    Dihedral reduction is used for P(n, 2) with n >= 5 (where the matching
    type is constant on orbits); otherwise every matching is its own class.
    """
    if g.is_petersen2 and g.n >= 5:
        classes = dihedral_classes(g, limit=budget)
    else:
        classes = []
        for edges in iter_matching_edge_sets(g):
            if len(classes) >= budget:
                raise BudgetExceeded(f"more than {budget} matchings", progress=len(classes))
            classes.append(OrbitClass(PerfectMatching(g, frozenset(edges)), 1))
    items = []
    for oc in classes:
        kind = classify(oc.representative) if g.is_petersen2 else None
        items.append(SweepItem(oc.representative, oc.size, kind))
    if jobs > 1 and g.n is not None and len(items) > 1:
        tasks = [(g.n, g.k, tuple(sorted(it.representative.edges))) for it in items]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = []
        for it in items:
            f, s = forcing_number(g, it.representative)
            results.append((f, tuple(sorted(s.edges))))
    for it, (f, s) in zip(items, results):
        it.forcing = f
        it.witness = s
    return items


def polynomial_from_items(items: list[SweepItem], n: int | None = None) -> ForcingPolynomial:
    total: Coefficients = {}
    per = {MatchingType.TYPE1: {}, MatchingType.TYPE2: {}}
    typed = all(it.kind is not None for it in items)
    for it in items:
        total[it.forcing] = total.get(it.forcing, 0) + it.size
        if typed:
            bucket = per[it.kind]
            bucket[it.forcing] = bucket.get(it.forcing, 0) + it.size
    if typed:
        return ForcingPolynomial(total, per[MatchingType.TYPE1], per[MatchingType.TYPE2], n)
    return ForcingPolynomial(total, n=n)


def forcing_polynomial(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ForcingPolynomial:
    return polynomial_from_items(sweep(g, budget, jobs), g.n)


def spectrum_of(poly: ForcingPolynomial) -> Spectrum:
    def support(c):
        return None if c is None else tuple(sorted(e for e, v in c.items() if v))
    return Spectrum(support(poly.total), support(poly.type1), support(poly.type2))


def spectrum(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Spectrum:
    return spectrum_of(forcing_polynomial(g, budget, jobs))


def dumps_polynomial(poly: ForcingPolynomial) -> str:
    return json.dumps(poly.to_json(), sort_keys=True)
