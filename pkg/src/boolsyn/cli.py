"""Command-line entry point: ``boolsyn {evolve,analyze,baseline,report}``."""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import logging
import re
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from . import svg
from .analysis import METRICS, ReportSchemaError, analyze_network, read_rows, write_rows
from .evolve import DegeneratePopulationError, EvolutionConfig, Objective, run_evolution
from .network import GenomeFormatError, load_genome, random_network, save_genome
from .stats import mann_whitney_u, summarize

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

log = logging.getLogger("boolsyn")

EXIT_USAGE = 2
EXIT_DEGENERATE = 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    objective: str = "MAX_REDUNDANCY"
    population_size: int | None = None
    generations: int = 750
    mutation_rate: float = 0.001
    tse_subset_cap: int = 75
    derrida_samples: int = 2000
    seed: int = 0
    count: int = 100
    analyze_top: int = 0
    out_dir: str = "out"

    def evolution_config(self) -> EvolutionConfig:
        return EvolutionConfig(
            objective=Objective(self.objective),
            population_size=self.population_size,
            generations=self.generations,
            mutation_rate=self.mutation_rate,
            tse_subset_cap=self.tse_subset_cap,
            master_seed=self.seed,
        )


_FIELD_TYPES = {"str": (str,), "int": (int,), "float": (float, int), "int | None": (int, type(None))}


def _line_of(text: str, key: str) -> int | None:
    pat = re.compile(rf'^\s*"?{re.escape(key)}"?\s*[:=]')
    for no, line in enumerate(text.splitlines(), start=1):
        if pat.search(line):
            return no
    return None


def load_config(path) -> RunConfig:
    """Read a TOML or JSON document whose keys mirror ``RunConfig``."""
    path = Path(path)
    text = path.read_text()
    try:
        if path.suffix == ".json":
            doc = json.loads(text)
        else:
            doc = tomllib.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}: {exc.msg}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}:1: config must be a table/object")

    known = {f.name: f for f in fields(RunConfig)}
    for key, value in doc.items():
        where = f"{path}:{_line_of(text, key) or '?'}"
        if key not in known:
            raise ConfigError(f"{where}: unknown key {key!r}")
        allowed = _FIELD_TYPES[known[key].type]
        if isinstance(value, bool) or not isinstance(value, allowed):
            raise ConfigError(f"{where}: {key} must be {known[key].type}, got {value!r}")
    cfg = RunConfig(**doc)
    if "objective" in doc:
        try:
            Objective(cfg.objective)
        except ValueError:
            where = f"{path}:{_line_of(text, 'objective') or '?'}"
            raise ConfigError(f"{where}: objective must be one of {[o.value for o in Objective]}") from None
    try:
        cfg.evolution_config()
    except ValueError as exc:
        key = next((k for k in doc if k in str(exc)), None)
        line = _line_of(text, key) if key else None
        raise ConfigError(f"{path}:{line or '?'}: {exc}") from None
    return cfg


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="TOML or JSON run config")
    p.add_argument("--seed", type=int, help="master seed (default 0, echoed)")
    p.add_argument("--tse-subset-cap", type=int, dest="tse_subset_cap")
    p.add_argument("--derrida-samples", type=int, dest="derrida_samples")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolsyn", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="evolve a population toward an objective")
    _add_common(p)
    p.add_argument("--objective", choices=[o.value for o in Objective])
    p.add_argument("--population-size", type=int, dest="population_size")
    p.add_argument("--generations", type=int)
    p.add_argument("--mutation-rate", type=float, dest="mutation_rate")
    p.add_argument("--analyze-top", type=int, dest="analyze_top", help="also analyze the N fittest genomes")
    p.add_argument("--out", dest="out_dir")

    p = sub.add_parser("analyze", help="analyze genome files or directories")
    _add_common(p)
    p.add_argument("paths", nargs="+")
    p.add_argument("--class", dest="label", default="random", help="class label recorded in every row")
    p.add_argument("--limit", type=int, help="analyze only the first N genomes")
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("baseline", help="generate and analyze random networks")
    _add_common(p)
    p.add_argument("--count", type=int)
    p.add_argument("--out", dest="out_dir")

    p = sub.add_parser("report", help="compare analysis CSVs and draw plots")
    p.add_argument("csvs", nargs="+")
    p.add_argument("--logs", nargs="*", default=[], help="evolution log CSVs to plot")
    p.add_argument("--out", required=True, help="output directory")
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            setattr(cfg, f.name, v)
    if getattr(args, "seed", None) is None and not getattr(args, "config", None):
        log.warning("no --seed given; using seed=%d", cfg.seed)
    return cfg


def _write_log(records, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["generation", "fitness_mean", "fitness_max", "fitness_min"])
        for r in records:
            w.writerow([r.generation, repr(r.fitness_mean), repr(r.fitness_max), repr(r.fitness_min)])


def cmd_evolve(cfg: RunConfig) -> int:
    ecfg = cfg.evolution_config()
    out = Path(cfg.out_dir)
    genomes = out / "genomes"
    genomes.mkdir(parents=True, exist_ok=True)
    result = run_evolution(ecfg)
    _write_log(result.records, out / "evolution_log.csv")
    for rank, net in enumerate(result.population):
        save_genome(net, genomes / f"rank_{rank}.json")
    doc = asdict(cfg) | {"population_size": ecfg.population_size}
    (out / "run_config.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    if cfg.analyze_top > 0:
        nets = result.fittest(cfg.analyze_top)
        rows = [
            analyze_network(net, f"rank_{i}", ecfg.objective.class_label, cfg.seed, cfg.tse_subset_cap, cfg.derrida_samples)
            for i, net in enumerate(nets)
        ]
        write_rows(rows, out / "analysis.csv")
    best = result.records[-1]
    print(f"{ecfg.objective.value}: generation {best.generation} max {best.fitness_max:.4f} mean {best.fitness_mean:.4f}")
    return 0


def _natural_key(p: Path):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", p.name)]


def collect_genomes(paths) -> list[Path]:
    files = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            files.extend(sorted(p.glob("*.json"), key=_natural_key))
        else:
            files.append(p)
    return files


def cmd_analyze(cfg: RunConfig, paths, label: str, out: str, limit: int | None = None) -> int:
    files = collect_genomes(paths)
    if limit is not None:
        files = files[:limit]
    nets = [(f.stem, load_genome(f)) for f in files]
    rows = [analyze_network(net, nid, label, cfg.seed, cfg.tse_subset_cap, cfg.derrida_samples) for nid, net in nets]
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    write_rows(rows, out)
    print(f"analyzed {len(rows)} networks -> {out}")
    return 0


def cmd_baseline(cfg: RunConfig) -> int:
    if cfg.count < 1:
        raise ConfigError("count must be >= 1")
    out = Path(cfg.out_dir)
    genomes = out / "genomes"
    genomes.mkdir(parents=True, exist_ok=True)
    rows = []
    for i in range(cfg.count):
        net = random_network(np.random.default_rng([cfg.seed, i]))
        nid = f"random_{i}"
        save_genome(net, genomes / f"{nid}.json")
        rows.append(analyze_network(net, nid, "random", cfg.seed, cfg.tse_subset_cap, cfg.derrida_samples))
    write_rows(rows, out / "analysis.csv")
    s = summarize([r.omega_bits for r in rows])
    print(f"baseline: {cfg.count} random networks, omega {s.mean:.3f} +/- {s.standard_deviation:.3f} bit")
    return 0


COMPARISON_HEADER = [
    "metric", "class_a", "class_b", "n_a", "n_b", "mean_a", "sd_a", "mean_b", "sd_b",
    "u_statistic", "u_statistic_reverse", "p_value",
]


def cmd_report(csvs, logs, out: str) -> int:
    if len(csvs) < 2:
        raise ConfigError("report needs at least two analysis CSVs")
    groups: dict[str, list] = {}
    for path in csvs:
        rows = read_rows(path)
        if not rows:
            raise ReportSchemaError(f"{path}: no rows")
        name = rows[0].label
        if name in groups:
            name = f"{name}@{Path(path).stem}"
        base, i = name, 1
        while name in groups:
            i += 1
            name = f"{base}#{i}"
        groups[name] = rows

    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "comparison.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(COMPARISON_HEADER)
        for metric in METRICS:
            for a, b in itertools.combinations(groups, 2):
                va = [getattr(r, metric) for r in groups[a]]
                vb = [getattr(r, metric) for r in groups[b]]
                sa, sb = summarize(va), summarize(vb)
                u, p = mann_whitney_u(va, vb)
                u_rev, _ = mann_whitney_u(vb, va)
                w.writerow([metric, a, b, sa.n, sb.n, repr(sa.mean), repr(sa.standard_deviation),
                            repr(sb.mean), repr(sb.standard_deviation), repr(u), repr(u_rev), repr(p)])

    for metric in METRICS:
        data = {name: [float(getattr(r, metric)) for r in rows] for name, rows in groups.items()}
        (outdir / f"box_{metric}.svg").write_text(svg.box_plot(data, metric, metric))

    if logs:
        series = {}
        for path in logs:
            gens, best = _read_log(path)
            series[Path(path).parent.name or Path(path).stem] = (gens, best)
        (outdir / "trajectories.svg").write_text(svg.trajectory_plot(series, "best fitness per generation", "fitness (bit)"))
    print(f"report for {len(groups)} classes -> {outdir}")
    return 0


def _read_log(path):
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["generation", "fitness_mean", "fitness_max", "fitness_min"]:
            raise ReportSchemaError(f"{path}: not an evolution log")
        rows = list(reader)
    return [int(r["generation"]) for r in rows], [float(r["fitness_max"]) for r in rows]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "report":
            return cmd_report(args.csvs, args.logs, args.out)
        cfg = resolve_config(args)
        if args.command == "evolve":
            return cmd_evolve(cfg)
        if args.command == "analyze":
            return cmd_analyze(cfg, args.paths, args.label, args.out, args.limit)
        return cmd_baseline(cfg)
    except DegeneratePopulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ConfigError, GenomeFormatError, ReportSchemaError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
