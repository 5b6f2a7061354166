#!/usr/bin/env python3
"""Print the canonical homology-rank tables over a parameter sweep."""

import argparse

from hopfcalc.invariants import FAMILIES, canonical_homology_ranks


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--d", type=int, default=4)
    args = parser.parse_args()

    for family in FAMILIES:
        print(f"== {family} (d = {args.d})")
        for n in range(3, args.n_max + 1):
            ks = [0] if family.endswith("k0") else range(1, n - 1)
            for k in ks:
                try:
                    ranks = canonical_homology_ranks(family, n, k, args.d)
                except ValueError:
                    continue
                nonzero = ", ".join(f"b_{i}={r}" for i, r in ranks.items() if r)
                print(f"  n={n} k={k}: {nonzero}")


if __name__ == "__main__":
    main()
