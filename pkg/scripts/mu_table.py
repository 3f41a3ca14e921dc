"""Smallest vertex counts for a handful of groups, by exhaustive generation.

Usage:
    python scripts/mu_table.py [--max-n 7] [--stretch] [--groups Trivial C2 C3 ...]

n <= 8 is the normal tier; --stretch allows n = 9 (minutes, not seconds).
"""

from __future__ import annotations

import argparse
import sys
import time

from icosaut.groups import parse_group_name
from icosaut.search import mu_search

DEFAULT_GROUPS = ["Trivial", "C2", "C3", "C4", "C5", "C6", "D3", "D4", "D5", "D6", "A4", "S4", "A5"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--stretch", action="store_true")
    ap.add_argument("--groups", nargs="*", default=DEFAULT_GROUPS)
    args = ap.parse_args()

    print(f"{'group':8s} {'result':>22s} {'certificate':>14s} {'secs':>7s}")
    for name in args.groups:
        t0 = time.perf_counter()
        rep = mu_search(parse_group_name(name), args.max_n, stretch=args.stretch,
                        progress=lambda n, c: print(f"  n={n}: {c} classes", file=sys.stderr))
        result = f"mu = {rep.n}" if rep.found else f"none up to {rep.n_examined}"
        print(f"{rep.target:8s} {result:>22s} {rep.certificate or '-':>14s} {time.perf_counter() - t0:7.2f}")


if __name__ == "__main__":
    main()
