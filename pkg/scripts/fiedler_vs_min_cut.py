"""Compare the spectral bisection's cut mass with the brute-force minimum cut.

Uses small rings (3..6 nodes) where every bipartition can be enumerated, and
reports how often the spectral cut exceeds 1.25x the optimum.

    python3 scripts/fiedler_vs_min_cut.py --networks 200
"""

import argparse

import numpy as np

from boolsyn.network import random_network, transition_map
from boolsyn.phi import Bipartition, cut_mass, effective_matrix, fiedler_bipartition


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--networks", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for n in range(3, 7):
        full = (1 << n) - 1
        parts = [Bipartition(a, full ^ a) for a in range(1, full) if a < full ^ a]
        ratios = []
        for i in range(args.networks):
            rng = np.random.default_rng([args.seed, n, i])
            em = effective_matrix(transition_map(random_network(rng, n=n)))
            best = min(cut_mass(em, p) for p in parts)
            got = cut_mass(em, fiedler_bipartition(em, rng))
            ratios.append(got / best if best > 0 else (1.0 if got == 0 else np.inf))
        ratios = np.array(ratios)
        print(f"n={n}: exceed 1.25x in {np.sum(ratios > 1.25 + 1e-9)}/{len(ratios)}, worst ratio {ratios.max():.2f}")


if __name__ == "__main__":
    main()
