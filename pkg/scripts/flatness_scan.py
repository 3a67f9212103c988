#!/usr/bin/env python3
"""Scan how evenly the nonunital multiplicities spread across families.

Reports min/max nonunital multiplicity, their ratio, and the invariant count
for each system in the requested grid.
"""

from __future__ import annotations

import argparse

from dynspan import (
    chain_rowmotion,
    distinct_multiset_rotation,
    flatness_report,
    multiset_rotation,
)

FAMILIES = {
    "multiset": multiset_rotation,
    "chain": chain_rowmotion,
    "distinct": distinct_multiset_rotation,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--max-k", type=int, default=5)
    args = parser.parse_args()

    print(f"{'family':<10} {'n':>3} {'k':>3} {'dim V':>6} {'inv':>4} "
          f"{'min':>4} {'max':>4} {'ratio':>6}")
    for name, build in FAMILIES.items():
        for n in range(2, args.max_n + 1):
            for k in range(2, args.max_k + 1):
                try:
                    system = build(n, k)
                except ValueError:
                    continue
                report = flatness_report(system)
                ratio = "-" if report.ratio is None else str(report.ratio)
                lo = "-" if report.min_nonunital is None else report.min_nonunital
                hi = "-" if report.max_nonunital is None else report.max_nonunital
                print(
                    f"{name:<10} {n:>3} {k:>3} {report.dim_v:>6} "
                    f"{report.mult_one:>4} {lo:>4} {hi:>4} {ratio:>6}"
                )


if __name__ == "__main__":
    main()
