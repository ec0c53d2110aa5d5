"""Complex Hermitian linear algebra on small dense matrices.

Matrices are plain ``numpy`` complex arrays. The eigensolver is a cyclic
Jacobi iteration so that every spectral quantity in the package comes from
code in this module rather than from LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimFactorizationMismatch,
    DimMismatch,
    NegativeEigenvalue,
    NoConvergence,
    NonRealTrace,
    NotHermitian,
    SingularNegativePower,
)

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
NEG_EIG_TOL = 1e-8
ZERO_EPS_FACTOR = 1e-12


def hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``m`` as an exactly symmetrised complex Hermitian array.

    Raises NotHermitian when ``m`` differs from its conjugate transpose by
    more than ``tol`` in any entry.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimMismatch(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NotHermitian("matrix has non-finite entries")
    dev = np.max(np.abs(a - a.conj().T))
    if dev > tol:
        raise NotHermitian(f"matrix is not Hermitian (max deviation {dev:.3g})")
    return 0.5 * (a + a.conj().T)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    eigenvalues: np.ndarray  # descending, |lambda| < zero_eps stored as 0
    eigenvectors: np.ndarray  # columns are orthonormal eigenvectors
    zero_eps: float

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.eigenvalues > 0))

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int):
    apq = a[p, q]
    g = abs(apq)
    phase = apq / g
    app, aqq = a[p, p].real, a[q, q].real
    theta = (aqq - app) / (2.0 * g)
    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
    rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ rot
    a[idx, :] = rot.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = app - t * g
    a[q, q] = aqq + t * g
    v[:, idx] = v[:, idx] @ rot


def jacobi_eig(h, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> SpectralDecomposition:
    """Eigendecompose a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * dim * max(1, ||h||_F)``. Eigenvalues come back in descending
    order; those smaller in magnitude than ``1e-12 * dim * max|lambda|``
    are set to exactly zero.
    """
    a = hermitian(h)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * n * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps + 1):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, v, p, q)
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    zero_eps = ZERO_EPS_FACTOR * n * float(np.max(np.abs(w)))
    w[np.abs(w) < zero_eps] = 0.0
    w.flags.writeable = False
    v.flags.writeable = False
    return SpectralDecomposition(w, v, zero_eps)


def _apply(spec: SpectralDecomposition, values: np.ndarray) -> np.ndarray:
    v = spec.eigenvectors
    out = (v * values) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def _nonneg_eigenvalues(spec: SpectralDecomposition) -> np.ndarray:
    w = spec.eigenvalues
    if np.any(w < -NEG_EIG_TOL):
        raise NegativeEigenvalue(f"eigenvalue {w.min():.3g} below -{NEG_EIG_TOL:g}")
    return np.where(w > 0, w, 0.0)


def matrix_power(spec: SpectralDecomposition, r: float) -> np.ndarray:
    """``S**r`` for positive semidefinite ``S``.

    Kernel directions map to zero for every ``r >= 0``, so ``S**0`` is the
    support projection. Negative ``r`` needs a trivial kernel.
    """
    w = _nonneg_eigenvalues(spec)
    pos = w > 0
    if r < 0 and not np.all(pos):
        raise SingularNegativePower(f"negative power {r} of a singular matrix")
    values = np.zeros_like(w)
    values[pos] = w[pos] ** r
    return _apply(spec, values)


def matrix_log_on_support(spec: SpectralDecomposition) -> np.ndarray:
    w = _nonneg_eigenvalues(spec)
    pos = w > 0
    values = np.zeros_like(w)
    values[pos] = np.log(w[pos])
    return _apply(spec, values)


def support_projection(spec: SpectralDecomposition) -> np.ndarray:
    return _apply(spec, (spec.eigenvalues > 0).astype(float))


def trace_product(a: np.ndarray, b: np.ndarray) -> float:
    """``Re tr(a @ b)`` for Hermitian ``a`` and ``b``."""
    if a.shape != b.shape:
        raise DimMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    t = np.sum(a * b.T)
    if abs(t.imag) > 1e-9:
        raise NonRealTrace(f"trace has imaginary part {t.imag:.3g}")
    return float(t.real)


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def partial_trace(m: np.ndarray, dim1: int, dim2: int, keep: int = 1) -> np.ndarray:
    """Trace out one factor of a ``dim1 * dim2`` bipartite operator.

    ``keep=1`` returns ``tr_2 m`` (``dim1 x dim1``), ``keep=2`` returns
    ``tr_1 m``.
    """
    if m.shape != (dim1 * dim2, dim1 * dim2):
        raise DimFactorizationMismatch(f"shape {m.shape} is not ({dim1}*{dim2})^2")
    t = m.reshape(dim1, dim2, dim1, dim2)
    if keep == 1:
        return np.einsum("ikjk->ij", t)
    if keep == 2:
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must be 1 or 2, got {keep}")


def max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m)))
