"""Desk-scale evolution sweep: every objective over several seeds.

Writes one directory per (objective, seed) through the CLI, so each run can be
re-analyzed or fed to ``boolsyn report``.

    python3 scripts/run_desk_evolution.py --out desk --seeds 0 1 2 3 4
"""

import argparse
import csv
from pathlib import Path

from boolsyn.cli import main as cli
from boolsyn.evolve import Objective


def final_row(log):
    with open(log, newline="") as fh:
        return list(csv.DictReader(fh))[-1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="desk")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2, 3, 4])
    ap.add_argument("--population-size", type=int, default=100)
    ap.add_argument("--generations", type=int, default=300)
    ap.add_argument("--analyze-top", type=int, default=4)
    args = ap.parse_args()

    for objective in Objective:
        for seed in args.seeds:
            run = Path(args.out) / f"{objective.class_label}_seed{seed}"
            cli([
                "evolve", "--objective", objective.value, "--seed", str(seed),
                "--population-size", str(args.population_size), "--generations", str(args.generations),
                "--analyze-top", str(args.analyze_top), "--out", str(run),
            ])
            last = final_row(run / "evolution_log.csv")
            print(f"  {run.name}: best {float(last['fitness_max']):.3f} mean {float(last['fitness_mean']):.3f}")


if __name__ == "__main__":
    main()
