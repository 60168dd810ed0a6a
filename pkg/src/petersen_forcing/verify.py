"""Compare brute-force results against the closed forms and the reference table."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

from . import constructions as cons
from . import table1
from .forcing import forcing_number, is_forcing_set
from .graph import build_generalized_petersen
from .matchings import BudgetExceeded, MatchingType, classify, count_type1, count_type2, enumerate_perfect_matchings
from .polynomial import DEFAULT_BUDGET, ForcingPolynomial, format_polynomial, forcing_polynomial, is_integer_interval

PASS, FAIL, NOT_CLAIMED, BUDGET = "pass", "fail", "not-claimed", "budget"

CLAIMS = ("counts", "table1", "t1max", "t1min", "t2max", "t2min", "t2max-construction",
          "spectrum", "explicit-set", "dc", "gap")

# n <= 200 whose forcing spectrum has no gap
CONTINUOUS_LISTED = frozenset(range(3, 60)) | {66, 73, 80, 87, 94}


@dataclass
class ReportItem:
    claim: str
    n: int
    expected: object
    computed: object
    status: str
    note: str = ""


class PolynomialCache:
    """Per-n forcing polynomials, optionally checkpointed to a directory."""

    def __init__(self, budget: int = DEFAULT_BUDGET, jobs: int = 1, checkpoint: str | Path | None = None):
        self.budget = budget
        self.jobs = jobs
        self.dir = Path(checkpoint) if checkpoint else None
        self._mem: dict[int, ForcingPolynomial] = {}
        if self.dir:
            self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, n: int) -> Path:
        return self.dir / f"poly-n{n}.json"

    def get(self, n: int) -> ForcingPolynomial:
        if n in self._mem:
            return self._mem[n]
        if self.dir and self._path(n).exists():
            poly = ForcingPolynomial.from_json(json.loads(self._path(n).read_text()))
        else:
            poly = forcing_polynomial(build_generalized_petersen(n, 2), self.budget, self.jobs)
            if self.dir:
                self._path(n).write_text(json.dumps(poly.to_json(), sort_keys=True))
        self._mem[n] = poly
        return poly


def _status(expected, computed) -> str:
    if expected is cons.NOT_CLAIMED:
        return NOT_CLAIMED
    return PASS if expected == computed else FAIL


def _show(x):
    return "not claimed" if x is cons.NOT_CLAIMED else x


def _support(coeffs: dict) -> list[int]:
    return sorted(e for e, c in coeffs.items() if c)


def check_counts(n: int) -> ReportItem:
    g = build_generalized_petersen(n, 2)
    tally = {MatchingType.TYPE1: 0, MatchingType.TYPE2: 0}
    for m in enumerate_perfect_matchings(g):
        tally[classify(m)] += 1
    expected = [count_type1(n), count_type2(n)]
    computed = [tally[MatchingType.TYPE1], tally[MatchingType.TYPE2]]
    return ReportItem("counts", n, expected, computed, _status(expected, computed))


def check_table1(n: int, cache: PolynomialCache) -> ReportItem:
    ref = table1.reference(n)
    poly = cache.get(n)
    return ReportItem("table1", n, ref.split(), poly.split(),
                      PASS if (ref.type1, ref.type2) == (poly.type1, poly.type2) else FAIL)


def check_extreme(claim: str, n: int, cache: PolynomialCache) -> ReportItem:
    poly = cache.get(n)
    coeffs = poly.type1 if claim.startswith("t1") else poly.type2
    support = _support(coeffs)
    computed = (max(support) if claim.endswith("max") else min(support)) if support else None
    expected = {"t1max": cons.type1_max, "t1min": cons.type1_min,
                "t2max": cons.type2_max, "t2min": cons.type2_min}[claim](n)
    return ReportItem(claim, n, _show(expected), computed, _status(expected, computed))


def check_t2max_construction(n: int) -> ReportItem:
    expected = cons.type2_max(n)
    if expected is cons.NOT_CLAIMED:
        return ReportItem("t2max-construction", n, _show(expected), None, NOT_CLAIMED)
    recipe = cons.build_extremal(n, cons.Extremal.T2MAX)
    recipe.check()
    f, _ = forcing_number(recipe.graph, recipe.matching)
    return ReportItem("t2max-construction", n, expected, f, _status(expected, f))


def check_spectrum(n: int, cache: PolynomialCache) -> ReportItem:
    computed = _support(cache.get(n).total)
    shape = "continuous" if is_integer_interval(computed) else "gap"
    note = f"{{{computed[0]}..{computed[-1]}}} {shape}" if computed else "empty"
    formula = cons.spectrum_formula(n)
    if formula is cons.NOT_CLAIMED:
        return ReportItem("spectrum", n, _show(formula), computed, NOT_CLAIMED, note)
    (a, b), (c, d) = formula
    expected = sorted(set(range(a, b + 1)) | set(range(c, d + 1)))
    return ReportItem("spectrum", n, expected, computed, _status(expected, computed), note)


def check_explicit_set(n: int) -> ReportItem:
    if n < 9:
        return ReportItem("explicit-set", n, "not claimed", None, NOT_CLAIMED)
    recipe = cons.build_extremal(n, cons.Extremal.T1MAX)
    ok = is_forcing_set(recipe.graph, recipe.matching, recipe.forcing_set)
    expected = [True, cons.type1_max(n)]
    computed = [ok, len(recipe.forcing_set)]
    return ReportItem("explicit-set", n, expected, computed, _status(expected, computed))


def check_dc(n: int) -> list[ReportItem]:
    from .chains import decode

    out = []
    for d, c in cons.dc_pairs(n):
        m = decode("D" * d + "C" * c, n)
        f, _ = forcing_number(m.graph, m)
        expected = cons.dc_closed_form(d, c)
        out.append(ReportItem(f"dc(d={d},c={c})", n, expected, f, _status(expected, f)))
    return out


def check_gap(n: int) -> ReportItem:
    expected = n not in CONTINUOUS_LISTED
    computed = cons.has_gap(n)
    return ReportItem("gap", n, expected, computed, _status(expected, computed))


def verify_theorem_suite(claims: Iterable[str], ns: Iterable[int], budget: int = DEFAULT_BUDGET,
                         jobs: int = 1, checkpoint=None) -> list[ReportItem]:
    cache = PolynomialCache(budget, jobs, checkpoint)
    report: list[ReportItem] = []
    ns = list(ns)
    for claim in claims:
        if claim not in CLAIMS:
            raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
        for n in ns:
            try:
                if claim == "counts":
                    report.append(check_counts(n))
                elif claim == "table1":
                    if n in table1.N_RANGE:
                        report.append(check_table1(n, cache))
                elif claim in ("t1max", "t1min", "t2max", "t2min"):
                    report.append(check_extreme(claim, n, cache))
                elif claim == "t2max-construction":
                    report.append(check_t2max_construction(n))
                elif claim == "spectrum":
                    report.append(check_spectrum(n, cache))
                elif claim == "explicit-set":
                    report.append(check_explicit_set(n))
                elif claim == "dc":
                    report.extend(check_dc(n))
                elif claim == "gap":
                    report.append(check_gap(n))
            except BudgetExceeded as exc:
                report.append(ReportItem(claim, n, None, f"budget exhausted after {exc.progress} classes", BUDGET))
    return report


def report_json(report: list[ReportItem]) -> str:
    return json.dumps([asdict(item) for item in report], indent=1, default=str)


def report_text(report: list[ReportItem]) -> str:
    rows = [("claim", "n", "expected", "computed", "status", "note")]
    rows += [(r.claim, str(r.n), str(r.expected), str(r.computed), r.status, r.note) for r in report]
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def summarize(report: list[ReportItem]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, NOT_CLAIMED: 0, BUDGET: 0}
    for r in report:
        out[r.status] += 1
    return out


__all__ = ["verify_theorem_suite", "ReportItem", "report_json", "report_text", "summarize", "format_polynomial"]
