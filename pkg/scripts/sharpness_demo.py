#!/usr/bin/env python3
"""How close to the ends of (0, 1) a perturbed constant first fails.

For lambda = alpha0 + eps the lower bound already fails at moderate r. For
lambda = beta0 - eps the failure only shows once log(1/r') is of order
1/eps, so the upper witnesses sit at r'^2 that shrink like exp(-c/eps).
This script tabulates both, together with log(1/r'^2) * eps, which should
level off as eps -> 0.
"""

import argparse
import math

from ellint.bounds import sharp_constants, sharpness_scan
from ellint.errors import WitnessNotFound


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--a", type=float, nargs="+", default=[0.1, 0.3, 0.5])
    parser.add_argument("--eps", type=float, nargs="+", default=[0.04, 0.02, 0.01, 0.005])
    args = parser.parse_args()

    print(f"{'a':>5} {'eps':>7} {'lower r':>10} {'upper rp2':>11} {'eps*log(1/rp2)':>15}")
    for a in args.a:
        c = sharp_constants(a)
        for eps in args.eps:
            low = sharpness_scan(a, c.alpha0 + eps, "lower")
            try:
                up = sharpness_scan(a, c.beta0 - eps, "upper")
                rp2 = f"{up.rp2:11.3e}"
                scale = f"{eps * math.log(1.0 / up.rp2):15.4f}"
            except WitnessNotFound:
                rp2, scale = f"{'beyond grid':>11}", f"{'-':>15}"
            print(f"{a:5.2f} {eps:7.3f} {low.r:10.3e} {rp2} {scale}")


if __name__ == "__main__":
    main()
