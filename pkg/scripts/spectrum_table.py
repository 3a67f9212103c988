#!/usr/bin/env python3
"""Tabulate evolution-operator spectra for the built-in families.

Example:
    python scripts/spectrum_table.py --family multiset --n 2..6 --k 2..6
"""

from __future__ import annotations

import argparse

from dynspan import (
    chain_rowmotion,
    distinct_multiset_rotation,
    multiset_rotation,
    spectrum,
)

FAMILIES = {
    "multiset": multiset_rotation,
    "chain": chain_rowmotion,
    "distinct": distinct_multiset_rotation,
}


def parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--family", choices=sorted(FAMILIES), default="multiset")
    parser.add_argument("--n", default="2..6", help="value range, e.g. 3 or 2..8")
    parser.add_argument("--k", default="2..5")
    parser.add_argument(
        "--method", choices=["galois", "cyclotomic"], default="galois"
    )
    args = parser.parse_args()

    build = FAMILIES[args.family]
    print(f"{'n':>3} {'k':>3} {'|X|':>6}  mult by divisor of the period")
    for n in parse_range(args.n):
        for k in parse_range(args.k):
            try:
                system = build(n, k)
            except ValueError:
                continue
            sp = spectrum(system, args.method)
            pairs = ", ".join(f"{d}: {m}" for d, m in sorted(sp.by_divisor.items()))
            print(f"{n:>3} {k:>3} {system.size:>6}  dim {sp.dimension:<4} {{{pairs}}}")


if __name__ == "__main__":
    main()
