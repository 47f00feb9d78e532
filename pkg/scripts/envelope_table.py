#!/usr/bin/env python3
"""Relative envelope margins of K_a over a log grid reaching both ends of (0, 1).

Writes CSV rows: a, r, r'^2, K_a, lower_margin/K_a, upper_margin/K_a.
Both relative margins go to zero at the end where the matching constant is
sharp: the lower one as r -> 0, the upper one as r -> 1.

    python scripts/envelope_table.py --a 0.1 0.3 0.5 --points 12 > margins.csv
"""

import argparse
import csv
import math
import sys

import numpy as np

from ellint.bounds import envelope
from ellint.elliptic import ModulusPoint


def grid(points: int) -> list[ModulusPoint]:
    small = [ModulusPoint.from_r(r) for r in np.geomspace(1e-6, math.sqrt(0.5), points)]
    large = [ModulusPoint.from_rp2(y) for y in np.geomspace(0.5, 1e-14, points + 1)[1:]]
    return small + large


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--a", type=float, nargs="+", default=[0.1, 0.25, 0.5])
    parser.add_argument("--points", type=int, default=10, help="points per half of the grid")
    args = parser.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["a", "r", "rp2", "K", "rel_lower_margin", "rel_upper_margin"])
    for a in args.a:
        for p in grid(args.points):
            rep = envelope(a, p)
            out.writerow(
                [a, f"{p.r:.17g}", f"{p.rp2:.6e}", f"{rep.value:.17g}",
                 f"{rep.lower_margin / rep.value:.6e}", f"{rep.upper_margin / rep.value:.6e}"]
            )


if __name__ == "__main__":
    main()
