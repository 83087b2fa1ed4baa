"""Summary statistics and rank tests for comparing network classes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as sps


@dataclass(frozen=True)
class SampleSummary:
    n: int
    mean: float
    standard_deviation: float


def summarize(values) -> SampleSummary:
    x = np.asarray(values, dtype=np.float64)
    if x.size == 0:
        raise ValueError("cannot summarize an empty sample")
    sd = float(x.std(ddof=1)) if x.size > 1 else 0.0
    return SampleSummary(int(x.size), float(x.mean()), sd)


def mann_whitney_u(a, b) -> tuple[float, float]:
    """U statistic of ``a`` against ``b`` and its two-sided p-value.

    The p-value uses the normal approximation with tie and continuity
    corrections. When every observation is tied the test has no
    information and p is 1.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be nonempty")
    res = sps.mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    p = float(res.pvalue)
    if math.isnan(p):
        p = 1.0
    return float(res.statistic), min(max(p, 0.0), 1.0)
