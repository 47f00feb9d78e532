#!/usr/bin/env python3
"""Error of K_a, E_a and R against 50-digit mpmath, in units of ulp.

Needs mpmath (installed with the ``test`` extra).
"""

import argparse
import math

import mpmath
import numpy as np

from ellint.elliptic import ModulusPoint, elle_gen, ellk_gen
from ellint.ramanujan import r_def

mpmath.mp.dps = 50


def ulps(value: float, ref) -> float:
    ref = float(ref)
    return abs(value - ref) / math.ulp(ref)


def ref_k(a, rp2):
    with mpmath.workdps(50 + int(-math.log10(rp2))):
        return mpmath.pi / 2 * mpmath.hyp2f1(a, 1 - mpmath.mpf(a), 1, 1 - mpmath.mpf(rp2))


def ref_e(a, rp2):
    with mpmath.workdps(50 + int(-math.log10(rp2))):
        am = mpmath.mpf(a)
        return mpmath.pi / 2 * mpmath.hyp2f1(am - 1, 1 - am, 1, 1 - mpmath.mpf(rp2))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=40)
    args = parser.parse_args()

    rp2s = np.geomspace(1.0 - 1e-6, 1e-30, args.points)
    print(f"{'a':>5} {'max ulp K':>10} {'max ulp E':>10} {'worst rp2 (K)':>14}")
    for a in (0.05, 0.1, 0.2, 0.3, 0.4, 0.5):
        errs_k = [ulps(ellk_gen(a, ModulusPoint.from_rp2(y)), ref_k(a, y)) for y in rp2s]
        errs_e = [ulps(elle_gen(a, ModulusPoint.from_rp2(y)), ref_e(a, y)) for y in rp2s]
        i = int(np.argmax(errs_k))
        print(f"{a:5.2f} {max(errs_k):10.2f} {max(errs_e):10.2f} {rp2s[i]:14.3e}")

    xs = np.linspace(0.001, 0.5, args.points)
    worst = max(
        ulps(r_def(x), -2 * mpmath.euler - mpmath.digamma(x) - mpmath.digamma(1 - mpmath.mpf(x))) for x in xs
    )
    print(f"R(x) on (0, 1/2]: max {worst:.2f} ulp")


if __name__ == "__main__":
    main()
