"""Command-line front end: ``pmf gen|enumerate|polynomial|forcing|verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass

from .chains import ChainParseError, decode, encode
from .forcing import forcing_number
from .graph import build_generalized_petersen
from .matchings import BudgetExceeded, PerfectMatching, census, classify, enumerate_perfect_matchings
from .polynomial import DEFAULT_BUDGET, format_polynomial, forcing_polynomial
from .verify import BUDGET, CLAIMS, FAIL, report_json, report_text, summarize, verify_theorem_suite

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3

CLAIM_GROUPS = {
    "extremal": ("t1max", "t1min", "t2max", "t2min"),
    "all": CLAIMS,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    ns: list[int]
    k: int = 2
    type: str = "all"
    matching: str | None = None
    anchor: int | None = None
    format: str = "text"
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    out: str | None = None
    claims: tuple[str, ...] = ()
    checkpoint: str | None = None
    list_matchings: bool = False

    def __post_init__(self):
        if not self.ns:
            raise UsageError("n-range is empty")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.budget < 1:
            raise UsageError("--budget-matchings must be >= 1")


def parse_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected A..B")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _default_jobs() -> int:
    raw = os.environ.get("PMF_JOBS", "1")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PMF_JOBS must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pmf", description="Perfect matchings and forcing numbers of generalized Petersen graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_n=True):
        g = sp.add_mutually_exclusive_group(required=need_n)
        g.add_argument("--n", type=int)
        g.add_argument("--n-range", metavar="A..B")
        sp.add_argument("--k", type=int, default=2)
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", metavar="PATH")
        return g

    common(sub.add_parser("gen", help="emit the edge list of P(n,k)"))

    sp = sub.add_parser("enumerate", help="count (and optionally list) perfect matchings by type")
    common(sp)
    sp.add_argument("--type", choices=("1", "2", "all"), default="all")
    sp.add_argument("--list", action="store_true", dest="list_matchings", help="list chain words of every matching")

    sp = sub.add_parser("polynomial", help="forcing polynomial, total and per type")
    common(sp)
    sp.add_argument("--type", choices=("1", "2", "all"), default="all")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--budget-matchings", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("forcing", help="forcing number and a minimum forcing set of one matching")
    common(sp)
    sp.add_argument("--matching", required=True, metavar="EXPR",
                    help="chain expression such as 'CD^4C^2', or vertex pairs '0-5,1-6,...'")
    sp.add_argument("--anchor", type=int, default=None)

    sp = sub.add_parser("verify", help="check closed forms and the reference table against computation")
    sp.add_argument("claim", choices=tuple(CLAIMS) + tuple(CLAIM_GROUPS))
    g = common(sp, need_n=False)
    g.add_argument("--max-n", type=int)
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--budget-matchings", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--checkpoint", metavar="DIR", help="per-n polynomial cache so interrupted runs resume")
    return p


def config_from_args(args) -> RunConfig:
    if getattr(args, "n", None) is not None:
        ns = [args.n]
    elif getattr(args, "n_range", None):
        ns = parse_range(args.n_range)
    elif getattr(args, "max_n", None) is not None:
        ns = list(range(args.min_n, args.max_n + 1))
    else:
        raise UsageError("one of --n, --n-range, --max-n is required")
    claims = ()
    if args.command == "verify":
        claims = CLAIM_GROUPS.get(args.claim, (args.claim,))
    jobs = getattr(args, "jobs", None)
    return RunConfig(
        command=args.command, ns=ns, k=args.k, type=getattr(args, "type", "all"),
        matching=getattr(args, "matching", None), anchor=getattr(args, "anchor", None),
        format=args.format, jobs=_default_jobs() if jobs is None else jobs,
        budget=getattr(args, "budget_matchings", DEFAULT_BUDGET), out=args.out, claims=claims,
        checkpoint=getattr(args, "checkpoint", None), list_matchings=getattr(args, "list_matchings", False),
    )


def _graph(n: int, k: int):
    try:
        return build_generalized_petersen(n, k)
    except ValueError as exc:
        raise UsageError(str(exc))


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_gen(cfg: RunConfig) -> str:
    parts = []
    for n in cfg.ns:
        g = _graph(n, cfg.k)
        pairs = [tuple(sorted(e)) for e in g.edges]
        if cfg.format == "json":
            parts.append(json.dumps({"n": n, "k": cfg.k, "vertices": g.num_vertices, "edges": pairs}))
        elif cfg.format == "csv":
            parts.append(_csv(pairs, ("u", "v")).rstrip("\n"))
        else:
            parts.append("\n".join(f"{a} {b}" for a, b in pairs))
    return "\n".join(parts) + "\n"


def _type_ok(kind, wanted: str) -> bool:
    return wanted == "all" or int(kind) == int(wanted)


def cmd_enumerate(cfg: RunConfig) -> str:
    records = []
    for n in cfg.ns:
        if cfg.k != 2:
            raise UsageError("enumerate classifies P(n,2) only")
        _graph(n, 2)
        c = census(n)
        rec = {"n": n, "type1": c.type1, "type2": c.type2, "total": c.total}
        if cfg.list_matchings:
            words = []
            for m in enumerate_perfect_matchings(build_generalized_petersen(n, 2)):
                kind = classify(m)
                if _type_ok(kind, cfg.type):
                    w = encode(m)
                    words.append([int(kind), w.letters, w.anchor])
            rec["matchings"] = sorted(words)
        records.append(rec)
    if cfg.format == "json":
        return json.dumps(records if len(records) > 1 else records[0], sort_keys=True) + "\n"
    if cfg.format == "csv":
        rows = [(r["n"], r["type1"], r["type2"], r["total"]) for r in records]
        return _csv(rows, ("n", "type1", "type2", "total"))
    lines = []
    for r in records:
        lines.append(f"n={r['n']} type1={r['type1']} type2={r['type2']} total={r['total']}")
        for kind, letters, anchor in r.get("matchings", []):
            lines.append(f"  type{kind} {letters} @{anchor}")
    return "\n".join(lines) + "\n"


def _poly_json(poly, wanted: str) -> dict:
    d = poly.to_json()
    if wanted == "1":
        d.pop("type2")
    elif wanted == "2":
        d.pop("type1")
    return d


def _render_polys(polys, cfg: RunConfig) -> str:
    if cfg.format == "json":
        data = [_poly_json(p, cfg.type) for p in polys]
        return json.dumps(data if len(data) != 1 else data[0], sort_keys=True) + "\n"
    if cfg.format == "csv":
        rows = []
        for p in polys:
            rows += [r for r in p.csv_rows() if cfg.type == "all" or str(r[1]) == cfg.type]
        return _csv(rows, ("n", "type", "exponent", "coefficient"))
    lines = []
    for p in polys:
        lines.append(f"n={p.n}")
        if cfg.type == "all":
            lines.append(f"total: {format_polynomial(p.total)}")
        if p.type1 is not None:
            if cfg.type in ("all", "1"):
                lines.append(f"type1: {format_polynomial(p.type1)}")
            if cfg.type in ("all", "2"):
                lines.append(f"type2: {format_polynomial(p.type2)}")
    return "\n".join(lines) + "\n"


class BudgetStop(Exception):
    def __init__(self, partial: str, message: str):
        super().__init__(message)
        self.partial = partial


def cmd_polynomial(cfg: RunConfig) -> str:
    polys = []
    for n in cfg.ns:
        g = _graph(n, cfg.k)
        try:
            polys.append(forcing_polynomial(g, cfg.budget, cfg.jobs))
        except BudgetExceeded as exc:
            marker = {"partial": True, "stopped_at_n": n, "reason": str(exc), "classes_seen": exc.progress}
            done = [_poly_json(p, cfg.type) for p in polys]
            partial = json.dumps({"marker": marker, "completed": done}, sort_keys=True) + "\n"
            raise BudgetStop(partial, f"budget exhausted at n={n}: {exc}")
    return _render_polys(polys, cfg)


def _parse_matching(cfg: RunConfig, n: int) -> PerfectMatching:
    text = cfg.matching.strip()
    g = _graph(n, cfg.k)
    if re.search(r"\d\s*-\s*\d", text):
        pairs = []
        for chunk in re.split(r"[,;\s]+", text):
            if not chunk:
                continue
            a, _, b = chunk.partition("-")
            pairs.append((int(a), int(b)))
        ids = []
        for a, b in pairs:
            if not g.has_edge(a, b):
                raise UsageError(f"{a}-{b} is not an edge of P({n},{cfg.k})")
            ids.append(g.edge_id(a, b))
        try:
            return PerfectMatching.from_edges(g, ids)
        except ValueError as exc:
            raise UsageError(str(exc))
    if cfg.k != 2:
        raise UsageError("chain expressions describe P(n,2) matchings; pass vertex pairs for other k")
    try:
        return decode(text, n, anchor=cfg.anchor, graph=g)
    except ChainParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}")
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_forcing(cfg: RunConfig) -> str:
    out = []
    for n in cfg.ns:
        m = _parse_matching(cfg, n)
        f, s = forcing_number(m.graph, m)
        witness = [tuple(sorted(m.graph.edges[e])) for e in sorted(s.edges)]
        kind = int(classify(m)) if m.graph.is_petersen2 else None
        rec = {"n": n, "k": cfg.k, "matching": cfg.matching, "type": kind, "forcing_number": f, "witness": witness}
        out.append(rec)
    if cfg.format == "json":
        return json.dumps(out if len(out) > 1 else out[0], sort_keys=True) + "\n"
    if cfg.format == "csv":
        rows = [(r["n"], r["type"], r["forcing_number"], " ".join(f"{a}-{b}" for a, b in r["witness"])) for r in out]
        return _csv(rows, ("n", "type", "forcing_number", "witness"))
    lines = []
    for r in out:
        lines.append(f"n={r['n']} type={r['type']} f={r['forcing_number']}")
        lines.append("witness: " + " ".join(f"{a}-{b}" for a, b in r["witness"]))
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.k != 2:
        raise UsageError("verify targets P(n,2)")
    try:
        report = verify_theorem_suite(cfg.claims, cfg.ns, cfg.budget, cfg.jobs, cfg.checkpoint)
    except ValueError as exc:
        raise UsageError(str(exc))
    tally = summarize(report)
    if cfg.format == "json":
        text = report_json(report) + "\n"
    elif cfg.format == "csv":
        rows = [(r.claim, r.n, r.expected, r.computed, r.status, r.note) for r in report]
        text = _csv(rows, ("claim", "n", "expected", "computed", "status", "note"))
    else:
        text = report_text(report)
        text += " ".join(f"{k}={v}" for k, v in tally.items()) + "\n"
    code = EXIT_VERIFY if tally[FAIL] else EXIT_BUDGET if tally[BUDGET] else EXIT_OK
    return text, code


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        code = EXIT_OK
        if cfg.command == "gen":
            text = cmd_gen(cfg)
        elif cfg.command == "enumerate":
            text = cmd_enumerate(cfg)
        elif cfg.command == "polynomial":
            text = cmd_polynomial(cfg)
        elif cfg.command == "forcing":
            text = cmd_forcing(cfg)
        else:
            text, code = cmd_verify(cfg)
    except UsageError as exc:
        print(f"pmf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetStop as exc:
        _emit(exc.partial, cfg.out)
        print(f"pmf: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(text, cfg.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
