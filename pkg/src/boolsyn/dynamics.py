"""Attractors, transients and the Derrida coefficient of a deterministic network."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import BooleanNetwork, transition_map


@dataclass(frozen=True)
class AttractorReport:
    cycles: list[list[int]]
    attractor_of: np.ndarray
    transient_lengths: np.ndarray

    @property
    def attractor_count(self) -> int:
        return len(self.cycles)

    @property
    def cycle_lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    @property
    def basin_sizes(self) -> np.ndarray:
        return np.bincount(self.attractor_of, minlength=len(self.cycles))

    @property
    def mean_transient(self) -> float:
        return float(self.transient_lengths.mean())


def find_attractors(tm: np.ndarray) -> AttractorReport:
    """Enumerate the cycles of the functional graph ``s -> tm[s]``.

    Each state gets the id of the attractor it falls into and the number of
    steps before it first lands on that cycle. Attractor ids follow the
    order in which cycles are discovered scanning states upward; each cycle
    is listed starting from its smallest state.
    """
    size = len(tm)
    nxt = [int(x) for x in tm]
    attractor = [-1] * size
    transient = [-1] * size
    cycles: list[list[int]] = []
    on_path = [-1] * size  # position of the state on the current walk

    for start in range(size):
        if attractor[start] >= 0:
            continue
        path = []
        s = start
        while attractor[s] < 0 and on_path[s] < 0:
            on_path[s] = len(path)
            path.append(s)
            s = nxt[s]
        if attractor[s] < 0:
            # closed a new cycle at path[on_path[s]:]
            first = on_path[s]
            cycle = path[first:]
            cid = len(cycles)
            lo = cycle.index(min(cycle))
            cycles.append(cycle[lo:] + cycle[:lo])
            for c in cycle:
                attractor[c] = cid
                transient[c] = 0
            tail = path[:first]
            base_id, base_t = cid, 0
        else:
            tail = path
            base_id, base_t = attractor[s], transient[s]
        for depth, c in enumerate(reversed(tail), start=1):
            attractor[c] = base_id
            transient[c] = base_t + depth
        for c in path:
            on_path[c] = -1

    return AttractorReport(
        cycles=cycles,
        attractor_of=np.array(attractor, dtype=np.int64),
        transient_lengths=np.array(transient, dtype=np.int64),
    )


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.int64)
    out = np.zeros_like(x)
    while np.any(x):
        out += x & 1
        x >>= 1
    return out


def perturbation_spread(
    tm: np.ndarray, n: int, m: int, samples: int, rng: np.random.Generator
) -> np.ndarray:
    """Hamming distances between successors of random states and m-bit-flipped copies."""
    states = rng.integers(0, 1 << n, size=samples, dtype=np.int64)
    # m distinct positions per sample: first m columns of a random permutation
    flips = np.argsort(rng.random((samples, n)), axis=1)[:, :m]
    masks = np.bitwise_or.reduce(np.left_shift(1, flips.astype(np.int64)), axis=1)
    return _popcount(tm[states] ^ tm[states ^ masks])


def derrida_coefficient(
    net: BooleanNetwork,
    samples_per_m: int = 2000,
    rng: np.random.Generator | None = None,
    perturbation_sizes: tuple[int, ...] = (1, 2),
) -> float:
    """Least-squares slope of mean one-step Hamming spread against perturbation size."""
    if samples_per_m < 2:
        raise ValueError("samples_per_m must be >= 2")
    rng = np.random.default_rng(0) if rng is None else rng
    tm = transition_map(net)
    xs = np.asarray(perturbation_sizes, dtype=np.float64)
    ys = np.array([perturbation_spread(tm, net.n, m, samples_per_m, rng).mean() for m in perturbation_sizes])
    dx = xs - xs.mean()
    return float((dx * (ys - ys.mean())).sum() / (dx * dx).sum())
