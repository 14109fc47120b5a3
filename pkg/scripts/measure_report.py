#!/usr/bin/env python3
"""Summarize a z-measure: top-weight diagrams, normalization defect, and
the theta-duality check, for a given (z, theta, n).

Example:
    python3 scripts/measure_report.py --z 1,1 --theta 0.5 --n 12 --top 10
"""

import argparse
import math
import sys

sys.path.insert(0, "src")

from zmeasures.measures import ZParams, z_measure, z_measure_symmetry_check  # noqa: E402
from zmeasures.partitions import YoungDiagram, iter_partition_tuples  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", default="1,0", help="complex z as re,im")
    ap.add_argument("--theta", type=float, default=0.5)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()
    re, im = (float(p) for p in args.z.split(","))
    p = ZParams(complex(re, im), args.theta)
    rows = []
    for parts in iter_partition_tuples(args.n):
        lam = YoungDiagram(parts)
        rows.append((z_measure(lam, p), parts))
    rows.sort(reverse=True)
    total = math.fsum(w for w, _ in rows)
    print(f"n={args.n}, z={p.z}, theta={p.theta}")
    print(f"partitions: {len(rows)}, normalization defect: {abs(total - 1.0):.3e}")
    worst = 0.0
    for w, parts in rows:
        lhs, rhs = z_measure_symmetry_check(YoungDiagram(parts), p)
        scale = max(lhs, rhs, 1e-300)
        worst = max(worst, abs(lhs - rhs) / scale)
    print(f"theta-duality worst relative defect: {worst:.3e}")
    print("weight,partition")
    for w, parts in rows[: args.top]:
        print(f"{w:.8g},{' '.join(map(str, parts))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
