"""Recompute the forcing polynomials of P(n, 2) and diff them against the shipped table.

    python scripts/reproduce_table1.py --n-range 3..26 --checkpoint runs/table1
"""

import argparse
import os
import sys
import time

from petersen_forcing import table1
from petersen_forcing.cli import parse_range
from petersen_forcing.verify import PolynomialCache


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-range", default="3..20")
    ap.add_argument("--jobs", type=int, default=int(os.environ.get("PMF_JOBS", "1")))
    ap.add_argument("--checkpoint", default=None, help="directory of per-n results; reruns resume from it")
    args = ap.parse_args(argv)

    cache = PolynomialCache(jobs=args.jobs, checkpoint=args.checkpoint)
    mismatches = 0
    for n in parse_range(args.n_range):
        t = time.time()
        got = cache.get(n)
        status = "-"
        if n in table1.N_RANGE:
            ref = table1.reference(n)
            same = (ref.type1, ref.type2) == (got.type1, got.type2)
            status = "ok" if same else f"MISMATCH (table {ref.split()})"
            mismatches += not same
        print(f"{n:3d}  {got.split():<60s} {time.time() - t:7.2f}s  {status}", flush=True)
    return 2 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
