"""Whole-minus-sum integrated information over a spectrally chosen bipartition."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .info import lagged_mutual_information, mask_of, nodes_of
from .network import BooleanNetwork, transition_map

EDGE_NOISE = 1e-6
EIGEN_RESIDUAL_TOL = 1e-8


class EigenSolverError(RuntimeError):
    def __init__(self, message: str, matrix: np.ndarray):
        super().__init__(message)
        self.matrix = matrix


@dataclass(frozen=True)
class Bipartition:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("both sides of a bipartition must be nonempty")
        if self.alpha & self.beta:
            raise ValueError("bipartition sides overlap")

    @classmethod
    def from_nodes(cls, alpha, n: int) -> "Bipartition":
        a = mask_of(alpha)
        return cls(a, ((1 << n) - 1) ^ a)

    def swapped(self) -> "Bipartition":
        return Bipartition(self.beta, self.alpha)


@dataclass(frozen=True)
class PhiResult:
    partition: Bipartition
    phi_wms: float
    phi_r: float


def _bit_columns(values: np.ndarray, n: int) -> np.ndarray:
    return ((values[:, None] >> np.arange(n)) & 1).astype(np.float64)


def effective_matrix(tm: np.ndarray) -> np.ndarray:
    """Symmetric matrix of summed one-step lagged MI between node pairs.

    ``m[i, j] = I(X_i(t); X_j(t+1)) + I(X_j(t); X_i(t+1))``; the diagonal is 0.
    """
    size = len(tm)
    n = size.bit_length() - 1
    past = _bit_columns(np.arange(size, dtype=np.int64), n)
    fut = _bit_columns(np.asarray(tm, dtype=np.int64), n)
    n11 = past.T @ fut
    p1 = past.sum(axis=0)[:, None]
    f1 = fut.sum(axis=0)[None, :]
    cells = [n11, p1 - n11, f1 - n11, size - p1 - f1 + n11]
    margins = [(p1, f1), (p1, size - f1), (size - p1, f1), (size - p1, size - f1)]
    lagged = np.zeros((n, n))
    with np.errstate(divide="ignore", invalid="ignore"):
        for c, (a, b) in zip(cells, margins):
            term = c / size * np.log2(c * size / (a * b))
            lagged += np.where(c > 0, term, 0.0)
    lagged = np.maximum(lagged, 0.0)
    m = lagged + lagged.T
    np.fill_diagonal(m, 0.0)
    return m


def fiedler_bipartition(em: np.ndarray, rng: np.random.Generator | None = None) -> Bipartition:
    """Split nodes by the sign of the Laplacian's second eigenvector.

    A tiny symmetric positive jitter on every edge keeps the graph connected.
    Zero entries go to ``alpha``; if one side would be empty the split falls
    back to the median entry.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    em = np.asarray(em, dtype=np.float64)
    n = em.shape[0]
    iu = np.triu_indices(n, 1)
    noise = np.zeros((n, n))
    noise[iu] = rng.uniform(np.finfo(float).tiny, EDGE_NOISE, size=len(iu[0]))
    w = em + noise + noise.T
    np.fill_diagonal(w, 0.0)
    lap = np.diag(w.sum(axis=1)) - w
    try:
        vals, vecs = np.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigendecomposition failed: {exc}", w) from None
    v, lam = vecs[:, 1], vals[1]
    if not np.linalg.norm(lap @ v - lam * v) < EIGEN_RESIDUAL_TOL:
        raise EigenSolverError("Fiedler vector residual above tolerance", w)
    alpha = np.flatnonzero(v >= 0)
    if len(alpha) in (0, n):
        order = np.argsort(v, kind="stable")
        alpha = order[n // 2 :]
    return Bipartition.from_nodes(alpha, n)


def _full(tm: np.ndarray) -> int:
    return len(tm) - 1


def phi_wms(tm: np.ndarray, part: Bipartition) -> float:
    """Whole-system effective information minus that of the two parts (may be negative)."""
    whole = lagged_mutual_information(tm, _full(tm), _full(tm))
    a = lagged_mutual_information(tm, part.alpha, part.alpha)
    b = lagged_mutual_information(tm, part.beta, part.beta)
    return whole - a - b


def phi_r(tm: np.ndarray, part: Bipartition) -> float:
    """``phi_wms`` plus the minimum lagged MI over the four ordered part pairs."""
    sides = (part.alpha, part.beta)
    redundancy = min(lagged_mutual_information(tm, g, d) for g in sides for d in sides)
    return phi_wms(tm, part) + redundancy


def cut_mass(em: np.ndarray, part: Bipartition) -> float:
    a, b = nodes_of(part.alpha), nodes_of(part.beta)
    return float(np.asarray(em)[np.ix_(a, b)].sum())


def integrated_information(net: BooleanNetwork, rng: np.random.Generator | None = None) -> PhiResult:
    tm = transition_map(net)
    part = fiedler_bipartition(effective_matrix(tm), rng)
    return PhiResult(part, phi_wms(tm, part), phi_r(tm, part))
