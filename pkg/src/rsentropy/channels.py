"""Quantum channels in Kraus form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CompletenessViolation, DimMismatch, NotUnitary, ShapeMismatch
from .quantum import DensityMatrix, validate_state

COMPLETENESS_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class KrausChannel:
    dim_in: int
    dim_out: int
    kraus_ops: tuple

    def __call__(self, rho: DensityMatrix) -> DensityMatrix:
        return apply_channel(self, rho)


def validate_channel(ops, tol: float = COMPLETENESS_TOL) -> KrausChannel:
    """Check shapes and the completeness relation ``sum K^dag K = I``."""
    mats = [np.array(k, dtype=complex) for k in ops]
    if not mats:
        raise ShapeMismatch("a channel needs at least one Kraus operator")
    shape = mats[0].shape
    if len(shape) != 2 or 0 in shape:
        raise ShapeMismatch(f"Kraus operators must be non-empty 2-D arrays, got {shape}")
    for k in mats:
        if k.shape != shape:
            raise ShapeMismatch(f"Kraus shapes differ: {shape} vs {k.shape}")
    dim_out, dim_in = shape
    total = sum(k.conj().T @ k for k in mats)
    dev = float(np.max(np.abs(total - np.eye(dim_in))))
    if dev > tol:
        raise CompletenessViolation(f"sum of K^dag K deviates from I by {dev:.3g}")
    for k in mats:
        k.flags.writeable = False
    return KrausChannel(dim_in, dim_out, tuple(mats))


def apply_channel(phi: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    if rho.dim != phi.dim_in:
        raise DimMismatch(f"channel input dim {phi.dim_in}, state dim {rho.dim}")
    out = sum(k @ rho.matrix @ k.conj().T for k in phi.kraus_ops)
    return validate_state(out)


def unitary_channel(u, tol: float = COMPLETENESS_TOL) -> KrausChannel:
    u = np.array(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitary(f"unitary must be square, got shape {u.shape}")
    if np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) > tol:
        raise NotUnitary("U^dag U differs from the identity")
    return validate_channel([u], tol)


def random_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed isometry from the QR factor of a complex Gaussian matrix."""
    g = (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    # make diag(R) real and nonnegative so the factorisation is unique
    phases = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return q * phases


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    return random_isometry(dim, dim, rng)


def random_channel(dim: int, kraus_count: int, seed) -> KrausChannel:
    """Random channel from a ``(dim*kraus_count) x dim`` isometry cut into blocks."""
    if dim < 1 or kraus_count < 1:
        raise ValueError("dim and kraus_count must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = random_isometry(dim * kraus_count, dim, rng)
    return validate_channel([v[k * dim:(k + 1) * dim] for k in range(kraus_count)])


def dephasing(dim: int) -> KrausChannel:
    ops = []
    for i in range(dim):
        k = np.zeros((dim, dim))
        k[i, i] = 1.0
        ops.append(k)
    return validate_channel(ops)


def amplitude_damping(gamma: float) -> KrausChannel:
    k0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]])
    k1 = np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]])
    return validate_channel([k0, k1])
