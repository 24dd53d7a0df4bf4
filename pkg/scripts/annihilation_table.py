#!/usr/bin/env python3
"""Tabulate annihilation orders: the least s with theta(s,t) * delta_j = 0.

Example:
    python scripts/annihilation_table.py --max-t 4 --span 16
"""

import argparse

from deltacalc import words as wd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-t", type=int, default=3)
    ap.add_argument("--span", type=int, default=12, help="check j in (2^t, 2^t + span]")
    ap.add_argument("--max-s", type=int, default=12)
    args = ap.parse_args()

    for t in range(args.max_t + 1):
        row = []
        for j in range(2**t + 1, 2**t + args.span + 1):
            s = wd.annihilation_order(j, t, s_max=args.max_s)
            row.append(f"{j}:{s if s is not None else '>' + str(args.max_s)}")
        print(f"t={t:<2} " + "  ".join(row))


if __name__ == "__main__":
    main()
