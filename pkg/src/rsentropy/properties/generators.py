"""Seeded random instances: distributions, states, PSD matrices."""

from __future__ import annotations

import numpy as np

from ..classical import ProbDist, validate_dist
from ..quantum import DensityMatrix, validate_state


def as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def rand_dist(n: int, seed) -> ProbDist:
    """Flat Dirichlet sample, entries kept away from zero."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = as_rng(seed)
    w = rng.exponential(size=n)
    w = np.maximum(w / w.sum(), 1e-12)
    return validate_dist(w / w.sum())


def ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def rand_psd(dim: int, rank: int, seed) -> np.ndarray:
    """Unnormalised rank-``rank`` PSD matrix ``G G^dag``."""
    g = ginibre(dim, rank, as_rng(seed))
    return g @ g.conj().T


def rand_state(dim: int, rank: int | None = None, seed=None) -> DensityMatrix:
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise ValueError(f"need 1 <= rank <= dim, got rank={rank}, dim={dim}")
    m = rand_psd(dim, rank, seed)
    return validate_state(m / np.trace(m).real)


def rand_state_within(support: np.ndarray, rank: int, seed) -> DensityMatrix:
    """Random state whose support lies inside the range of projection ``support``."""
    m = rand_psd(support.shape[0], rank, seed)
    m = support @ m @ support
    return validate_state(m / np.trace(m).real)


def rand_hermitian(dim: int, seed) -> np.ndarray:
    g = ginibre(dim, dim, as_rng(seed))
    return 0.5 * (g + g.conj().T)


def diag_state(weights) -> DensityMatrix:
    return validate_state(np.diag(np.asarray(weights, dtype=complex)))
