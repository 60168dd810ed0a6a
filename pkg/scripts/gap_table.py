"""List the predicted forcing spectrum of P(n, 2) and whether it has a gap.

    python scripts/gap_table.py --max-n 120
"""

import argparse

from petersen_forcing import constructions as cons


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=100)
    args = ap.parse_args(argv)
    print("n   type-2 [min,max]  type-1 [min,max]  gap")
    for n in range(34, args.max_n + 1):
        (a, b), (c, d) = cons.spectrum_formula(n)
        print(f"{n:<3d} {f'[{a},{b}]':<17s} {f'[{c},{d}]':<17s} {'yes' if cons.has_gap(n) else 'no'}")
    small = [n for n in range(3, 34) if cons.has_gap(n)]
    print(f"n < 34 with a gap (from the reference table): {small or 'none'}")


if __name__ == "__main__":
    main()
