"""Independent reference computations used only by the tests.

Nothing here imports the package: values are rebuilt from the defining sums
with exact rationals, brute-force loops or numpy's LAPACK eigensolver.
"""

import math
from fractions import Fraction

import numpy as np


def frac_rel_power_sum(a, b, r: int) -> Fraction:
    """sum a_i^r b_i^(1-r) for integer r, exactly."""
    return sum(Fraction(x) ** r * Fraction(y) ** (1 - r) for x, y in zip(a, b))


def frac_tsallis(a, b, r: int) -> Fraction:
    return -(frac_rel_power_sum(a, b, r) - 1) / (1 - r)


def kl_exact(a, b) -> float:
    # single log of an exact rational product: ln prod (a/b)^a for rational a
    return sum(float(Fraction(x)) * math.log(Fraction(x) / Fraction(y)) for x, y in zip(a, b))


def eig_lapack(h):
    w, v = np.linalg.eigh(h)
    return w[::-1], v[:, ::-1]


def fun_lapack(h, f):
    w, v = np.linalg.eigh(h)
    return (v * f(w)) @ v.conj().T


def partial_trace_loop(m, d1, d2, keep=1):
    """(x, A_1 y) = sum_i (x (x) e_i, A (y (x) e_i)), evaluated entry by entry."""
    if keep == 1:
        out = np.zeros((d1, d1), dtype=complex)
        for x in range(d1):
            for y in range(d1):
                for i in range(d2):
                    out[x, y] += m[x * d2 + i, y * d2 + i]
        return out
    out = np.zeros((d2, d2), dtype=complex)
    for x in range(d2):
        for y in range(d2):
            for i in range(d1):
                out[x, y] += m[i * d2 + x, i * d2 + y]
    return out


def kron_loop(a, b):
    n, m = a.shape[0], b.shape[0]
    out = np.zeros((n * m, n * m), dtype=complex)
    for i1 in range(n):
        for j1 in range(n):
            for i2 in range(m):
                for j2 in range(m):
                    out[i1 * m + i2, j1 * m + j2] = a[i1, j1] * b[i2, j2]
    return out
