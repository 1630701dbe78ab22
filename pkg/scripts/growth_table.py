"""Print the growth factor of the segmentation count for a grid of segment-length bounds.

    python scripts/growth_table.py --max-a 5 --max-b 8
"""

import argparse

from segtract import SegmentBounds
from segtract.combinatorics import classify_bounds, coefficients, empirical_growth, gf_for_bounds, growth_for_bounds


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-a", type=int, default=4)
    parser.add_argument("--max-b", type=int, default=7)
    parser.add_argument("--n", type=int, default=200, help="coefficient index for the empirical ratio")
    args = parser.parse_args()

    cases = [SegmentBounds()]
    cases += [SegmentBounds(a) for a in range(2, args.max_a + 1)]
    cases += [SegmentBounds(1, b) for b in range(2, args.max_b + 1)]
    cases += [SegmentBounds(a, b) for a in range(2, args.max_a + 1) for b in range(a + 1, args.max_b + 1)]

    print(f"{'kind':<10}{'a':>3}{'b':>5}{'A (bisection)':>18}{'ratio @N':>18}{'|diff|':>11}")
    for bounds in cases:
        est = growth_for_bounds(bounds)
        ratio = empirical_growth(coefficients(gf_for_bounds(bounds), args.n))
        b = "-" if bounds.max_len is None else bounds.max_len
        print(f"{classify_bounds(bounds):<10}{bounds.min_len:>3}{b:>5}{est.A:>18.12f}{ratio:>18.12f}{abs(ratio - est.A):>11.1e}")


if __name__ == "__main__":
    main()
