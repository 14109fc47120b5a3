#!/usr/bin/env python3
"""Tabulate the 2x2 matrix kernel and the one-point density on a grid.

Example:
    python3 scripts/kernel_grid.py --z 0.3,0.4 --lo 0.2 --hi 5.0 --num 20
"""

import argparse
import sys

import numpy as np

sys.path.insert(0, "src")

from zmeasures.kernels import KernelParams, matrix_kernel  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", default="0.3,0.4", help="complex z as re,im")
    ap.add_argument("--lo", type=float, default=0.2)
    ap.add_argument("--hi", type=float, default=5.0)
    ap.add_argument("--num", type=int, default=20)
    args = ap.parse_args()
    re, im = (float(p) for p in args.z.split(","))
    params = KernelParams(complex(re, im))
    xs = np.linspace(args.lo, args.hi, args.num)
    print("x,density,S(x,2x),S_x,S_y,S_xy,error")
    for x in xs:
        diag = matrix_kernel(float(x), float(x), params)
        off = matrix_kernel(float(x), float(2 * x), params)
        print(
            f"{x:.6g},{diag.s_y:.8g},{off.s:.8g},{off.s_x:.8g},"
            f"{off.s_y:.8g},{off.s_xy:.8g},{off.error:.2g}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
