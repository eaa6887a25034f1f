#!/usr/bin/env python3
"""Convergence study of the rasterized third-coefficient region against
the closed-form radius 1 - |b1|^3, sweeping angle samples and resolution.

Example:
    python3 scripts/b3_region_convergence.py --b1 0.5 0.9
"""

import argparse
import sys
import time

from schwarzlab.regions import b3_region


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b1", type=float, nargs="+", default=[0.0, 0.3, 0.5, 0.9])
    ap.add_argument("--angles", type=int, nargs="+", default=[256, 1024, 4096, 10000])
    ap.add_argument("--resolutions", type=int, nargs="+", default=[128, 256, 512, 1024])
    args = ap.parse_args()

    print(f"{'b1':>5s} {'angles':>7s} {'res':>5s} {'max_modulus':>12s} "
          f"{'exact':>8s} {'error':>10s} {'bound':>10s} {'time':>6s}")
    worst_ratio = 0.0
    for b1 in args.b1:
        exact = 1.0 - b1**3
        for m in args.angles:
            for res in args.resolutions:
                start = time.perf_counter()
                est = b3_region(b1, angle_samples=m, resolution=res)
                dt = time.perf_counter() - start
                err = abs(est.max_modulus - exact)
                bound = 2.0 / res + 10.0 / m
                worst_ratio = max(worst_ratio, err / bound)
                print(f"{b1:5.2f} {m:7d} {res:5d} {est.max_modulus:12.6f} "
                      f"{exact:8.4f} {err:10.2e} {bound:10.2e} {dt:5.2f}s")
    print(f"\nworst error/bound ratio: {worst_ratio:.3f} (must stay below 1)")
    return 0 if worst_ratio < 1.0 else 1


if __name__ == "__main__":
    sys.exit(main())
