#!/usr/bin/env python3
"""Corpus verification experiment: worst slack of every coefficient bound
over seeded Schwarz and Herglotz corpora.

Example:
    python3 scripts/run_corpus_verification.py --samples 1000 --seed 42
"""

import argparse
import sys
import time

from schwarzlab.cli import RunConfig, _run_verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--order", type=int, default=12)
    args = ap.parse_args()

    start = time.perf_counter()
    status, rows, worst = _run_verify(
        RunConfig(command="verify", order=args.order, seed=args.seed, samples=args.samples)
    )
    elapsed = time.perf_counter() - start

    print(f"{'bound':24s} {'checks':>9s} {'worst slack':>14s} {'at sample':>10s}")
    for row in rows:
        print(
            f"{row['bound']:24s} {row['checks']:9d} {row['worst_slack']:14.3e} "
            f"{row['worst_index']:10d}"
        )
    print(f"\noverall worst slack: {worst:.3e}  ({elapsed:.1f}s, status {status})")
    return status


if __name__ == "__main__":
    sys.exit(main())
