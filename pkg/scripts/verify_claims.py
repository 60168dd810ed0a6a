"""Run every closed-form check over a range of n and write the report.

    python scripts/verify_claims.py --n-range 3..40 --out report.json
"""

import argparse
import sys

from petersen_forcing.cli import parse_range
from petersen_forcing.verify import CLAIMS, FAIL, report_json, report_text, summarize, verify_theorem_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-range", default="3..30")
    ap.add_argument("--claims", nargs="+", default=list(CLAIMS), choices=CLAIMS)
    ap.add_argument("--checkpoint", default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None, help="write the JSON report here")
    args = ap.parse_args(argv)

    report = verify_theorem_suite(args.claims, parse_range(args.n_range), jobs=args.jobs, checkpoint=args.checkpoint)
    print(report_text(report), end="")
    tally = summarize(report)
    print(" ".join(f"{k}={v}" for k, v in tally.items()))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report_json(report) + "\n")
    return 2 if tally[FAIL] else 0


if __name__ == "__main__":
    sys.exit(main())
