"""Per-network analysis rows and their CSV schema."""

from __future__ import annotations

import csv
import math
import zlib
from dataclasses import astuple, dataclass, fields
from pathlib import Path

import numpy as np

from .dynamics import derrida_coefficient, find_attractors
from .info import intervention_distribution, marginal_entropy, o_information, tse_complexity
from .network import BooleanNetwork, transition_map
from .phi import effective_matrix, fiedler_bipartition, phi_r, phi_wms

CLASSES = ("random", "redundant", "synergistic", "complex")

CSV_HEADER = (
    "network_id,class,omega_bits,tse_bits,joint_entropy_bits,attractor_count,"
    "mean_transient,derrida,phi_wms_bits,phi_r_bits,tse_seed,derrida_seed,phi_noise_seed"
).split(",")

METRICS = (
    "omega_bits",
    "tse_bits",
    "joint_entropy_bits",
    "attractor_count",
    "mean_transient",
    "derrida",
    "phi_wms_bits",
    "phi_r_bits",
)


class ReportSchemaError(ValueError):
    pass


@dataclass(frozen=True)
class AnalysisRow:
    network_id: str
    label: str
    omega_bits: float
    tse_bits: float
    joint_entropy_bits: float
    attractor_count: int
    mean_transient: float
    derrida: float
    phi_wms_bits: float
    phi_r_bits: float
    tse_seed: int
    derrida_seed: int
    phi_noise_seed: int

    def __post_init__(self):
        if self.label not in CLASSES:
            raise ValueError(f"class must be one of {CLASSES}, got {self.label!r}")
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"{f.name} is not finite for {self.network_id}")


_PURPOSES = {"tse": 1, "derrida": 2, "phi": 3}


def derive_seed(seed: int, network_id: str, purpose: str) -> int:
    """Per-row seed fixed by the run seed and the network id alone."""
    ss = np.random.SeedSequence([seed, zlib.crc32(network_id.encode()), _PURPOSES[purpose]])
    return int(ss.generate_state(1)[0])


def analyze_network(
    net: BooleanNetwork,
    network_id: str,
    label: str,
    seed: int = 0,
    tse_subset_cap: int = 75,
    derrida_samples: int = 2000,
) -> AnalysisRow:
    tm = transition_map(net)
    d = intervention_distribution(tm)
    attractors = find_attractors(tm)
    seeds = {p: derive_seed(seed, network_id, p) for p in _PURPOSES}
    part = fiedler_bipartition(effective_matrix(tm), np.random.default_rng(seeds["phi"]))
    return AnalysisRow(
        network_id=network_id,
        label=label,
        omega_bits=o_information(d),
        tse_bits=tse_complexity(d, tse_subset_cap, np.random.default_rng(seeds["tse"])),
        joint_entropy_bits=marginal_entropy(d, d.full_mask),
        attractor_count=attractors.attractor_count,
        mean_transient=attractors.mean_transient,
        derrida=derrida_coefficient(net, derrida_samples, np.random.default_rng(seeds["derrida"])),
        phi_wms_bits=phi_wms(tm, part),
        phi_r_bits=phi_r(tm, part),
        tse_seed=seeds["tse"],
        derrida_seed=seeds["derrida"],
        phi_noise_seed=seeds["phi"],
    )


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v) + 0.0)
    return str(v)


def write_rows(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            w.writerow([_fmt(v) for v in astuple(row)])


def read_rows(path) -> list[AnalysisRow]:
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ReportSchemaError(f"{path}: header does not match the analysis schema")
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if len(rec) != len(CSV_HEADER):
                raise ReportSchemaError(f"{path}:{lineno}: expected {len(CSV_HEADER)} fields")
            try:
                vals = [cast(x) for cast, x in zip(_CASTS, rec)]
                rows.append(AnalysisRow(*vals))
            except ValueError as exc:
                raise ReportSchemaError(f"{path}:{lineno}: {exc}") from None
    return rows


# field annotations are strings under postponed evaluation
_CASTS = [{"str": str, "float": float, "int": int}[f.type] for f in fields(AnalysisRow)]
