#!/usr/bin/env python3
"""Per-order counts of both constructed families next to the exhaustive counts.

    python scripts/census.py --n-max 13

Prints a table: order, all trees, extremal trees, family T, gamma==gamma_t2
trees, family O. Matching columns are what the extremal and gamma-eq sweeps
assert tree by tree.
"""

from __future__ import annotations

import argparse

from semitotal.enumeration import all_trees
from semitotal.families import generate_family_O, generate_family_T, is_extremal, is_gamma_equal


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=13)
    args = ap.parse_args()
    fam_t = generate_family_T(args.n_max).counts()
    fam_o = generate_family_O(args.n_max).counts()
    print(f"{'n':>3} {'trees':>7} {'extremal':>9} {'T':>5} {'equal':>7} {'O':>5}")
    for n in range(2, args.n_max + 1):
        trees = list(all_trees(n))
        ext = sum(map(is_extremal, trees))
        eq = sum(map(is_gamma_equal, trees))
        print(f"{n:>3} {len(trees):>7} {ext:>9} {fam_t[n]:>5} {eq:>7} {fam_o[n]:>5}")


if __name__ == "__main__":
    main()
