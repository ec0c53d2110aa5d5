"""Density matrices and the quantum unified (r, s)-entropies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .classical import divergence_from_overlap
from .errors import (
    DimMismatch,
    DomainError,
    NotPositiveSemidefinite,
    SigmaSingularForExtendedR,
    TraceNotOne,
)
from .linalg import SpectralDecomposition
from .params import Branch, EntropyParams

STATE_TOL = 1e-8
SUPPORT_TOL = 1e-8
OVERLAP_ZERO_TOL = 1e-12
OVERLAP_CLAMP = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated state together with its cached eigendecomposition.

    Construct through :func:`validate_state`.
    """

    matrix: np.ndarray
    spectral: SpectralDecomposition

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.spectral.eigenvalues

    @property
    def invertible(self) -> bool:
        return bool(np.all(self.spectral.eigenvalues > 0))

    @cached_property
    def support(self) -> np.ndarray:
        return linalg.support_projection(self.spectral)

    @cached_property
    def log(self) -> np.ndarray:
        return linalg.matrix_log_on_support(self.spectral)

    def power(self, r: float) -> np.ndarray:
        return linalg.matrix_power(self.spectral, r)


@dataclass(frozen=True)
class DivergenceResult:
    value: float
    branch: Branch
    overlap: float | None = None

    def __float__(self):
        return self.value


def validate_state(h, tol: float = STATE_TOL) -> DensityMatrix:
    """Check PSD and unit trace, clamp round-off and renormalise."""
    spec = linalg.jacobi_eig(linalg.hermitian(h))
    w = spec.eigenvalues
    if w[-1] < -tol:
        raise NotPositiveSemidefinite(f"smallest eigenvalue {w[-1]:.3g}")
    w = np.where(w > 0, w, 0.0)
    total = math.fsum(w)
    if abs(total - 1.0) > tol:
        raise TraceNotOne(f"trace is {total!r}")
    w = w / total
    w.flags.writeable = False
    spec = SpectralDecomposition(w, spec.eigenvectors, spec.zero_eps)
    m = spec.reconstruct()
    m = 0.5 * (m + m.conj().T)
    m.flags.writeable = False
    return DensityMatrix(m, spec)


def _require_same_dim(rho: DensityMatrix, sigma: DensityMatrix):
    if rho.dim != sigma.dim:
        raise DimMismatch(f"dimensions differ: {rho.dim} vs {sigma.dim}")


def von_neumann(rho: DensityMatrix) -> float:
    w = rho.eigenvalues[rho.eigenvalues > 0]
    return float(-np.sum(w * np.log(w)))


def quantum_unified_entropy(rho: DensityMatrix, params: EntropyParams) -> float:
    r, s = params.r, params.s
    if not r > 0:
        raise DomainError(f"order r must be > 0, got {r}")
    if params.branch is Branch.R1:
        return von_neumann(rho)
    w = rho.eigenvalues[rho.eigenvalues > 0]
    log_p = math.log(float(np.sum(w**r)))
    if params.branch is Branch.S0:
        return log_p / (1.0 - r) + 0.0
    return math.expm1(s * log_p) / ((1.0 - r) * s) + 0.0


def overlap(rho: DensityMatrix, sigma: DensityMatrix, r: float) -> float:
    """``tr(rho**r @ sigma**(1 - r))``.

    ``r > 1`` is only defined for invertible ``sigma``. For ``0 <= r <= 1``
    round-off outside ``[0, 1]`` is clipped.
    """
    _require_same_dim(rho, sigma)
    if r < 0:
        raise DomainError(f"overlap needs r >= 0, got {r}")
    if r > 1 and not sigma.invertible:
        raise SigmaSingularForExtendedR(f"r = {r} > 1 needs an invertible sigma")
    x = linalg.trace_product(rho.power(r), sigma.power(1.0 - r))
    if r <= 1:
        if -OVERLAP_CLAMP <= x < 0:
            x = 0.0
        elif 1 < x <= 1 + OVERLAP_CLAMP:
            x = 1.0
    return x


def _eigen_weights(rho: DensityMatrix, sigma: DensityMatrix) -> np.ndarray:
    # W[i, j] = |<p_i|q_j>|^2
    return np.abs(rho.spectral.eigenvectors.conj().T @ sigma.spectral.eigenvectors) ** 2


def support_contained(rho: DensityMatrix, sigma: DensityMatrix, tol: float = SUPPORT_TOL) -> bool:
    """True when every eigenvector of ``rho`` with positive weight avoids ker(sigma)."""
    _require_same_dim(rho, sigma)
    w = _eigen_weights(rho, sigma)
    rows = rho.eigenvalues > 0
    cols = sigma.eigenvalues <= 0
    if not np.any(cols):
        return True
    return bool(np.all(w[np.ix_(rows, cols)].sum(axis=1) <= tol))


def umegaki_rel_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """``tr(rho ln rho) - tr(rho ln sigma)``, +inf if supp(rho) leaves supp(sigma).

    Computed eigenbasis to eigenbasis, so no logarithm of a singular
    matrix is ever formed.
    """
    _require_same_dim(rho, sigma)
    if not support_contained(rho, sigma):
        return math.inf
    lam, mu = rho.eigenvalues, sigma.eigenvalues
    i, j = lam > 0, mu > 0
    w = _eigen_weights(rho, sigma)[np.ix_(i, j)]
    lp, mp = lam[i], mu[j]
    return float(np.sum(lp * np.log(lp)) - lp @ w @ np.log(mp))


def kernel_inclusion(rho: DensityMatrix, sigma: DensityMatrix, tol: float = SUPPORT_TOL) -> bool:
    """Ker(rho) inside Ker(sigma), i.e. supp(sigma) inside supp(rho)."""
    _require_same_dim(rho, sigma)
    w = _eigen_weights(rho, sigma)
    kernel = rho.eigenvalues <= 0
    if not np.any(kernel):
        return True
    # weight that sigma's support puts on each kernel vector of rho
    cols = sigma.eigenvalues > 0
    return bool(np.all(w[np.ix_(kernel, cols)].sum(axis=1) <= tol))


def quantum_unified_rel_entropy(
    rho: DensityMatrix, sigma: DensityMatrix, params: EntropyParams
) -> DivergenceResult:
    _require_same_dim(rho, sigma)
    branch = params.branch
    if branch is Branch.R1:
        return DivergenceResult(umegaki_rel_entropy(rho, sigma), branch)
    x = overlap(rho, sigma, params.r)
    xz = 0.0 if abs(x) <= OVERLAP_ZERO_TOL else x
    return DivergenceResult(divergence_from_overlap(xz, params), branch, x)


def rel_entropy(rho: DensityMatrix, sigma: DensityMatrix, r: float, s: float) -> float:
    return quantum_unified_rel_entropy(rho, sigma, EntropyParams(r, s)).value


def tsallis_rel_entropy(rho: DensityMatrix, sigma: DensityMatrix, r: float) -> float:
    return -(overlap(rho, sigma, r) - 1.0) / (1.0 - r)


def type_r_rel_entropy(rho: DensityMatrix, sigma: DensityMatrix, r: float) -> float:
    """``-(r-1)^-1 [tr(rho^(1/r) sigma^(1-1/r))^r - 1]``; needs invertible sigma for r < 1."""
    return -(overlap(rho, sigma, 1.0 / r) ** r - 1.0) / (r - 1.0)


def log_derivative_trace(rho: DensityMatrix, sigma: DensityMatrix, r: float) -> float:
    """``tr(rho^r (ln rho - ln sigma) sigma^(1-r))``, the r-derivative of the overlap."""
    _require_same_dim(rho, sigma)
    m = rho.power(r) @ (rho.log - sigma.log) @ sigma.power(1.0 - r)
    return float(np.trace(m).real)


def mix(weights, states) -> DensityMatrix:
    m = sum(w * st.matrix for w, st in zip(weights, states))
    return validate_state(m)


def tensor(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    return validate_state(linalg.tensor_product(a.matrix, b.matrix))


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    w = linalg.jacobi_eig(a.matrix - b.matrix).eigenvalues
    return 0.5 * float(np.sum(np.abs(w)))
