"""Exact information measures on the intervention distribution of a network.

Distributions are integer occupancy counts over the ``2**n`` global states.
Marginalizing onto a node subset is integer summation; the only floating
point step is the final Shannon entropy (base 2, ``0 log 0 = 0``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .network import N_NODES


@dataclass(frozen=True, eq=False)
class CountDistribution:
    """Occupancy counts of every global state of an ``n``-node system."""

    counts: np.ndarray
    n: int = N_NODES

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        if c.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} counts, got shape {c.shape}")
        if np.any(c < 0):
            raise ValueError("counts must be nonnegative")
        if c.sum() == 0:
            raise ValueError("distribution has no mass")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def from_states(cls, states, n: int = N_NODES) -> "CountDistribution":
        """Equal weight on each listed state (repeats accumulate)."""
        return cls(np.bincount(np.asarray(states, dtype=np.int64), minlength=1 << n), n)


def intervention_distribution(tm: np.ndarray) -> CountDistribution:
    """Image of the uniform distribution after one step of ``tm``."""
    size = len(tm)
    n = size.bit_length() - 1
    return CountDistribution(np.bincount(tm, minlength=size), n)


def mask_of(nodes) -> int:
    m = 0
    for i in nodes:
        m |= 1 << int(i)
    return m


def nodes_of(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def _entropy_from_counts(h: np.ndarray, total: int) -> float:
    h = h[h > 0].astype(np.float64)
    p = h / total
    return float(-(p * np.log2(p)).sum())


def marginal_entropy(d: CountDistribution, subset: int) -> float:
    """Entropy in bits of ``d`` projected onto the nodes set in ``subset``."""
    if subset == 0:
        return 0.0
    keys = np.arange(1 << d.n, dtype=np.int64) & subset
    return _entropy_from_counts(np.bincount(keys, weights=d.counts), d.total)


@lru_cache(maxsize=8)
def _clogc_table(total: int) -> np.ndarray:
    c = np.arange(total + 1, dtype=np.float64)
    out = np.zeros_like(c)
    out[2:] = c[2:] * np.log2(c[2:])
    out.setflags(write=False)
    return out


@njit(cache=True)
def _masked_entropies(states, weights, masks, clogc, total, size):
    hist = np.zeros(size, dtype=np.int64)
    out = np.empty(len(masks))
    log_total = np.log2(total)
    for m in range(len(masks)):
        mask = masks[m]
        for j in range(len(states)):
            hist[states[j] & mask] += weights[j]
        acc = 0.0
        for j in range(len(states)):
            key = states[j] & mask
            c = hist[key]
            if c > 0:
                acc += clogc[c]
                hist[key] = 0
        out[m] = log_total - acc / total
    return out


def subset_entropies(d: CountDistribution, masks) -> np.ndarray:
    """Marginal entropies for a batch of node masks (vectorized ``marginal_entropy``)."""
    masks = np.asarray(masks, dtype=np.int64).reshape(-1)
    support = np.flatnonzero(d.counts)
    return _masked_entropies(
        support.astype(np.int64),
        d.counts[support],
        masks,
        _clogc_table(d.total),
        d.total,
        1 << d.n,
    )


def _singleton_masks(n: int) -> np.ndarray:
    return np.left_shift(1, np.arange(n, dtype=np.int64))


def total_correlation(d: CountDistribution, subset: int | None = None) -> float:
    """Sum of single-node entropies minus the joint entropy of ``subset``."""
    subset = d.full_mask if subset is None else subset
    if subset == 0:
        return 0.0
    singles = [1 << i for i in nodes_of(subset)]
    h = subset_entropies(d, singles + [subset])
    return float(h[:-1].sum() - h[-1])


def o_information(d: CountDistribution) -> float:
    """``(2 - n) TC(X) + sum_i TC(X^{-i})``; positive = redundancy, negative = synergy."""
    n, full = d.n, d.full_mask
    singles = _singleton_masks(n)
    h = subset_entropies(d, np.concatenate([singles, full ^ singles, [full]]))
    h_single, h_rest, h_joint = h[:n], h[n : 2 * n], h[-1]
    sum_single = h_single.sum()
    tc_whole = sum_single - h_joint
    tc_rest = (sum_single - h_single) - h_rest
    return float((2 - n) * tc_whole + tc_rest.sum())


def dual_total_correlation(d: CountDistribution) -> float:
    """``H(X) - sum_i H(X_i | X^{-i})``, computed with the unbatched entropy path."""
    full = d.full_mask
    h_joint = marginal_entropy(d, full)
    residual = sum(h_joint - marginal_entropy(d, full ^ (1 << i)) for i in range(d.n))
    return h_joint - residual


@lru_cache(maxsize=None)
def subsets_of_size(n: int, size: int) -> np.ndarray:
    """All ``size``-node masks of an ``n``-node system, in lexicographic node order."""
    masks = np.array([mask_of(c) for c in itertools.combinations(range(n), size)], dtype=np.int64)
    masks.setflags(write=False)
    return masks


def tse_masks(n: int, max_subsets_per_scale: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Subsets evaluated at each scale ``1..n-1``.

    Scales with at most ``max_subsets_per_scale`` subsets are enumerated; the
    rest draw that many distinct subsets uniformly from ``rng``.
    """
    if max_subsets_per_scale < 1:
        raise ValueError("max_subsets_per_scale must be >= 1")
    out = []
    for size in range(1, n):
        pool = subsets_of_size(n, size)
        if len(pool) > max_subsets_per_scale:
            pool = pool[np.sort(rng.choice(len(pool), max_subsets_per_scale, replace=False))]
        out.append(pool)
    return out


def tse_complexity(
    d: CountDistribution,
    max_subsets_per_scale: int = 75,
    rng: np.random.Generator | None = None,
) -> float:
    """Tononi-Sporns-Edelman complexity in bits, subsampled at large scales."""
    rng = np.random.default_rng(0) if rng is None else rng
    n = d.n
    scales = tse_masks(n, max_subsets_per_scale, rng)
    singles = _singleton_masks(n)
    h = subset_entropies(d, np.concatenate([singles, [d.full_mask], *scales]))
    h_single = h[:n]
    tc_whole = h_single.sum() - h[n]

    # TC(S) = sum_{i in S} H(X_i) - H(S); the singleton sum is a popcount-weighted lookup
    pos = n + 1
    total = 0.0
    for size, masks in enumerate(scales, start=1):
        hs = h[pos : pos + len(masks)]
        pos += len(masks)
        bits = (masks[:, None] >> np.arange(n)) & 1
        mean_tc = float((bits @ h_single - hs).mean())
        total += (size / n) * tc_whole - mean_tc
    return float(total)


def _lagged_keys(tm: np.ndarray, past: int, future: int) -> tuple[np.ndarray, np.ndarray, int]:
    states = np.arange(len(tm), dtype=np.int64)
    p_nodes, f_nodes = nodes_of(past), nodes_of(future)
    return _pack(states, p_nodes), _pack(np.asarray(tm, dtype=np.int64), f_nodes), len(f_nodes)


def lagged_joint_distribution(tm: np.ndarray, past: int, future: int) -> np.ndarray:
    """Joint counts of (past bits at t, future bits at t+1) under uniform time-t states.

    Returns an array of shape ``(2**|past|, 2**|future|)`` summing to ``len(tm)``.
    Subset bits are packed in ascending node order.
    """
    pi, fi, nf_bits = _lagged_keys(tm, past, future)
    nf = 1 << nf_bits
    n_past = 1 << past.bit_count()
    joint = np.bincount(pi * nf + fi, minlength=n_past * nf)
    return joint.reshape(n_past, nf)


def _pack(states: np.ndarray, nodes: list[int]) -> np.ndarray:
    out = np.zeros_like(states)
    for pos, node in enumerate(nodes):
        out |= ((states >> node) & 1) << pos
    return out


def mutual_information(joint: np.ndarray) -> float:
    """Mutual information in bits of a 2-d count table."""
    total = int(joint.sum())
    hx = _entropy_from_counts(joint.sum(axis=1), total)
    hy = _entropy_from_counts(joint.sum(axis=0), total)
    hxy = _entropy_from_counts(joint.ravel(), total)
    return max(hx + hy - hxy, 0.0)


def _key_entropy(keys: np.ndarray) -> float:
    _, counts = np.unique(keys, return_counts=True)
    return _entropy_from_counts(counts, len(keys))


def lagged_mutual_information(tm: np.ndarray, past: int, future: int) -> float:
    """``I(X^past(t); X^future(t+1))`` with a maximum-entropy time-t distribution.

    Same value as ``mutual_information(lagged_joint_distribution(...))`` but
    computed on the occupied cells only, so large subsets stay cheap.
    """
    if past == 0 or future == 0:
        return 0.0
    pi, fi, nf_bits = _lagged_keys(tm, past, future)
    mi = _key_entropy(pi) + _key_entropy(fi) - _key_entropy((pi << nf_bits) | fi)
    return max(mi, 0.0)
