"""Largest change of the forcing number across the type-2 local flips, per n.

Records behaviour only; nothing is asserted.

    python scripts/flip_steps.py --n-range 7..30
"""

import argparse

from petersen_forcing import constructions as cons
from petersen_forcing.cli import parse_range
from petersen_forcing.forcing import forcing_number
from petersen_forcing.graph import build_generalized_petersen
from petersen_forcing.matchings import MatchingType, classify, dihedral_classes

FLIPS = [("CD", cons.transform_cd_to_dc), ("DC", cons.transform_dc_to_cd),
         ("CCCC", cons.transform_c4_to_d3), ("DDD", cons.transform_d3_to_c4)]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-range", default="7..30")
    args = ap.parse_args(argv)
    print("n   flips  max|df|")
    for n in parse_range(args.n_range):
        g = build_generalized_petersen(n, 2)
        worst = count = 0
        for oc in dihedral_classes(g):
            m = oc.representative
            if classify(m) is not MatchingType.TYPE2:
                continue
            f = forcing_number(g, m)[0]
            for pattern, flip in FLIPS:
                for col in cons.chain_columns(m, pattern):
                    worst = max(worst, abs(forcing_number(g, flip(m, col))[0] - f))
                    count += 1
        print(f"{n:<3d} {count:<6d} {worst}", flush=True)


if __name__ == "__main__":
    main()
