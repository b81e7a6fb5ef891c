"""Exact total area of right-framed equidistant nets and its gap to 1/6."""

import argparse
from fractions import Fraction

from stringnet import NetConfig, total_area
from stringnet.rational import format_rational


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sizes", nargs="*", type=int, default=[2, 3, 4, 5, 10, 20, 50, 100, 200, 500, 1000])
    args = ap.parse_args()
    print(f"{'N':>6}  {'total':>22}  {'total - 1/6':>16}  {'float':>12}")
    for n in args.sizes:
        tot = total_area(NetConfig(n))
        gap = tot - Fraction(1, 6)
        print(f"{n:>6}  {format_rational(tot):>22}  {format_rational(gap):>16}  {float(gap):>12.3e}")


if __name__ == "__main__":
    main()
