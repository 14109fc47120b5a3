#!/usr/bin/env python3
"""Run the lattice-to-continuum comparison along a xi-ladder.

Example:
    python3 scripts/limit_ladder.py --z 0.3,0.4 --u 1.0 \
        --xi 0.5 0.7 0.8 --nmax 40
"""

import argparse
import sys

sys.path.insert(0, "src")

from zmeasures.correlations import verify_limit  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", default="0.3,0.4", help="complex z as re,im")
    ap.add_argument("--u", type=float, nargs="+", default=[1.0])
    ap.add_argument("--xi", nargs="+", default=["0.5", "0.7", "0.8"])
    ap.add_argument("--nmax", type=int, default=40)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    re, im = (float(p) for p in args.z.split(","))
    rep = verify_limit(args.u, complex(re, im), args.xi, n_max=args.nmax,
                       workers=args.workers)
    print(f"continuum rho_{len(args.u)}({args.u}) = {rep.continuum:.8g}")
    print("xi,lattice_points,rescaled,bound,deviation,rel_dev,inconclusive")
    for i, xi in enumerate(rep.xi_ladder):
        pts = " ".join(str(p) for p in rep.lattice_points[i])
        print(
            f"{xi},{pts},{rep.rescaled_lattice[i]:.8g},"
            f"{rep.rescaled_bounds[i]:.3g},{rep.deviations[i]:.4g},"
            f"{rep.relative_deviations[i]:.4g},{rep.inconclusive[i]}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
