"""Unified (r, s)-entropy and relative entropy of discrete distributions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DomainError,
    LengthMismatch,
    NegativeWeight,
    SumOutOfTolerance,
    ZeroWeightForbidden,
)
from .params import Branch, EntropyParams

DIST_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ProbDist:
    """A validated probability vector. Build it with :func:`validate_dist`."""

    weights: np.ndarray

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights.tolist())

    def __eq__(self, other):
        if not isinstance(other, ProbDist):
            return NotImplemented
        return self.weights.shape == other.weights.shape and bool(
            np.all(self.weights == other.weights)
        )

    def __repr__(self):
        return f"ProbDist({', '.join(f'{w:.6g}' for w in self.weights)})"

    @property
    def strictly_positive(self) -> bool:
        return bool(np.all(self.weights > 0))


def validate_dist(raw: Sequence[float], allow_zero: bool = False, tol: float = DIST_TOL) -> ProbDist:
    """Check ``raw`` is a probability vector and renormalise it by its exact sum."""
    w = np.array(raw, dtype=float).ravel()
    if w.size == 0:
        raise DomainError("distribution is empty")
    if not np.all(np.isfinite(w)):
        raise DomainError("distribution has non-finite entries")
    if np.any(w < 0):
        raise NegativeWeight(f"negative weight {w.min():g}")
    if not allow_zero and np.any(w == 0):
        raise ZeroWeightForbidden("zero weight in a strictly positive distribution")
    total = math.fsum(w)
    if abs(total - 1.0) > tol:
        raise SumOutOfTolerance(f"weights sum to {total!r}, tolerance {tol:g}")
    w = w / total
    w.flags.writeable = False
    return ProbDist(w)


def _require_r(r: float):
    if not r > 0:
        raise DomainError(f"order r must be > 0, got {r}")


def _check_pair(a: ProbDist, b: ProbDist):
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    if not (a.strictly_positive and b.strictly_positive):
        raise DomainError("relative entropy needs strictly positive distributions")


def power_sum(a: ProbDist, r: float) -> float:
    """``sum_i a_i**r``; zero weights contribute nothing."""
    _require_r(r)
    w = a.weights[a.weights > 0]
    return float(np.sum(w**r))


def shannon(a: ProbDist) -> float:
    w = a.weights[a.weights > 0]
    return float(-np.sum(w * np.log(w)))


def unified_entropy(a: ProbDist, params: EntropyParams) -> float:
    r, s = params.r, params.s
    _require_r(r)
    branch = params.branch
    if branch is Branch.R1:
        return shannon(a)
    log_p = math.log(power_sum(a, r))
    if branch is Branch.S0:
        return log_p / (1.0 - r) + 0.0
    return math.expm1(s * log_p) / ((1.0 - r) * s) + 0.0


def relative_power_sum(a: ProbDist, b: ProbDist, r: float) -> float:
    """``sum_i a_i**r * b_i**(1 - r)``."""
    _check_pair(a, b)
    _require_r(r)
    return float(np.sum(a.weights**r * b.weights ** (1.0 - r)))


def kl_divergence(a: ProbDist, b: ProbDist) -> float:
    _check_pair(a, b)
    return float(np.sum(a.weights * np.log(a.weights / b.weights)))


def divergence_from_overlap(x: float, params: EntropyParams) -> float:
    """Map the power-sum ``x`` to the S0 or GEN divergence.

    Shared by the classical and quantum code. ``x == 0`` is only reachable in
    the quantum case: the Renyi value is +inf, the general value is
    ``1/((1-r)s)`` for ``s > 0`` and +inf for ``s < 0``.
    """
    r, s = params.r, params.s
    branch = params.branch
    if branch is Branch.R1:
        raise DomainError("r == 1 has no overlap form")
    if x <= 0.0:
        if branch is Branch.S0 or s < 0:
            return math.inf
        return 1.0 / ((1.0 - r) * s)
    log_x = math.log(x)
    if branch is Branch.S0:
        return -log_x / (1.0 - r) + 0.0
    return -math.expm1(s * log_x) / ((1.0 - r) * s) + 0.0


def unified_rel_entropy(a: ProbDist, b: ProbDist, params: EntropyParams) -> float:
    _check_pair(a, b)
    _require_r(params.r)
    if params.branch is Branch.R1:
        return kl_divergence(a, b)
    return divergence_from_overlap(relative_power_sum(a, b, params.r), params)


def tsallis_rel_entropy(a: ProbDist, b: ProbDist, r: float) -> float:
    """Tsallis relative entropy written out directly, without the GEN branch."""
    return -(relative_power_sum(a, b, r) - 1.0) / (1.0 - r)


def type_r_rel_entropy(a: ProbDist, b: ProbDist, r: float) -> float:
    """Relative entropy of type r: ``-(r-1)^-1 [(sum a^(1/r) b^(1-1/r))^r - 1]``."""
    return -(relative_power_sum(a, b, 1.0 / r) ** r - 1.0) / (r - 1.0)


def product_dist(a: ProbDist, b: ProbDist) -> ProbDist:
    """All products ``a_i * b_j`` in row-major order."""
    w = np.outer(a.weights, b.weights).ravel()
    w.flags.writeable = False
    return ProbDist(w)


def mix(lam: float, a: ProbDist, b: ProbDist) -> ProbDist:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    w = lam * a.weights + (1.0 - lam) * b.weights
    w.flags.writeable = False
    return ProbDist(w)
