"""Analyze seeded random 12-node networks and print per-metric mean and sd.

    python3 scripts/run_baseline.py --count 100 --seed 0
"""

import argparse
import time

import numpy as np

from boolsyn.analysis import METRICS, analyze_network
from boolsyn.network import random_network
from boolsyn.stats import summarize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = [
        analyze_network(random_network(np.random.default_rng([args.seed, i])), f"random_{i}", "random", args.seed)
        for i in range(args.count)
    ]
    for metric in METRICS:
        s = summarize([getattr(r, metric) for r in rows])
        print(f"{metric:20s} {s.mean:9.4f} +/- {s.standard_deviation:.4f}")
    print(f"{args.count} networks in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
