"""Exit criteria. One PASS/FAIL line per criterion is printed in the summary.

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import frac_rel_power_sum, frac_tsallis, kl_exact
from rsentropy import classical as cl
from rsentropy import linalg
from rsentropy import quantum as qu
from rsentropy.params import EntropyParams
from rsentropy.properties import ParamGrid, run_suite
from rsentropy.properties.generators import diag_state, rand_dist, rand_hermitian, rand_state
from rsentropy.properties.suites import R_GRID, S_GRID

pytestmark = pytest.mark.acceptance

SEED = 2026
RESULTS = []


def record(criterion, ok, detail):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
    assert ok, f"{criterion}: {detail}"


def suite_line(rep):
    return (
        f"{rep.suite_name} trials={rep.trials} checks={rep.checks} "
        f"max_violation={rep.max_violation:.3g} tol={rep.tol:g} failures={rep.failure_count}"
    )


def check_suite(criterion, name, trials, tol, **kwargs):
    rep = run_suite(name, trials=trials, tol=tol, seed=SEED, **kwargs)
    record(criterion, rep.passed and rep.max_violation <= tol, suite_line(rep))
    return rep


def test_01_commuting_reduction():
    check_suite("1 commuting reduction", "commuting_reduction", 500, 1e-10)


def test_02_exact_values():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        a = rand_dist(n, rng)
        rho = rand_state(int(rng.integers(2, 7)), None, rng)
        for r in R_GRID[1:]:
            for s in S_GRID:
                p = EntropyParams(r, s)
                worst = max(worst, abs(cl.unified_rel_entropy(a, a, p)))
                worst = max(worst, abs(qu.quantum_unified_rel_entropy(rho, rho, p).value))

    half = [Fraction(1, 2)] * 2
    quarter = [Fraction(1, 4), Fraction(3, 4)]
    A, B = cl.validate_dist([0.5, 0.5]), cl.validate_dist([0.25, 0.75])
    rho0, sigma = diag_state([1.0, 0.0]), diag_state([0.25, 0.75])
    exact = {
        "overlap 4/3": (cl.relative_power_sum(A, B, 2), float(frac_rel_power_sum(half, quarter, 2))),
        "Tsallis 1/3": (cl.unified_rel_entropy(A, B, EntropyParams(2, 1)), float(frac_tsallis(half, quarter, 2))),
        "KL 0.5 ln(4/3)": (cl.unified_rel_entropy(A, B, EntropyParams(1, 0)), kl_exact(half, quarter)),
        "extended-r 3": (
            qu.quantum_unified_rel_entropy(rho0, sigma, EntropyParams(2, 1)).value,
            float(-(Fraction(1) * Fraction(4) - 1) / (1 - 2)),
        ),
    }
    errs = {k: abs(v - ref) for k, (v, ref) in exact.items()}
    ok = worst <= 1e-10 and all(e <= 1e-12 for e in errs.values())
    detail = f"max |E(X||X)| = {worst:.3g}; " + ", ".join(f"{k} err={e:.2g}" for k, e in errs.items())
    record("2 exact values", ok, detail)


def test_03_theorem_2_1_sandwich():
    grid = ParamGrid(R_GRID[1:-1], tuple(s for s in S_GRID if s >= 0))
    check_suite("3 classical sandwich", "thm21_sandwich", 1000, 1e-9, grid=grid, dims=range(2, 9))


def test_04_nonnegativity_and_kernel_criterion():
    check_suite("4 overlap bound, E >= 0, r=0 kernel criterion", "q_nonneg", 1000, 1e-9)


def test_05_joint_convexity():
    check_suite("5 joint convexity", "q_joint_convex", 500, 1e-8)


def test_06_unitary_invariance():
    check_suite("6a unitary invariance", "q_unitary", 500, 1e-9)


def test_06_tensor_additivity():
    check_suite("6b tensor nonadditivity", "q_additivity", 500, 1e-9, dims=[(2, 2), (2, 3)])


def test_07_channel_dpi():
    check_suite("7a channel data processing", "dpi_channel", 500, 1e-8, dims=[2, 3, 4])


def test_07_partial_trace_dpi():
    check_suite("7b partial-trace monotonicity", "dpi_partial_trace", 500, 1e-8)


def test_08_theorem_3_4_sandwich():
    check_suite("8 quantum sandwich", "thm34_sandwich", 500, 1e-8)


def test_09_r_monotone_nonnegative_s():
    grid = ParamGrid(s_values=tuple(s for s in S_GRID if s >= 0) + (2.0,), add_type_r=False)
    check_suite("9a increasing in r for s >= 0", "thm35_r_monotone", 300, 1e-8, grid=grid)


def test_09_r_monotone_negative_s():
    grid = ParamGrid(s_values=tuple(s for s in S_GRID if s < 0), add_type_r=False)
    check_suite("9b decreasing in r for s < 0", "thm35_r_monotone", 300, 1e-8, grid=grid)


def test_09_s_monotone():
    check_suite("9c decreasing in s", "thm35_s_monotone", 300, 1e-8)


def test_09_s_convex():
    check_suite("9d midpoint convex in s", "thm35_s_convex", 300, 1e-8)


def test_09_derivative_formulas():
    check_suite("9e closed-form derivatives vs central differences", "thm35_derivatives", 300, 1e-4)


def test_10_eigendecomposition():
    rng = np.random.default_rng(SEED)
    recon = unit = 0.0
    for _ in range(1000):
        d = int(rng.integers(2, 9))
        h = rand_hermitian(d, rng)
        s = linalg.jacobi_eig(h)
        v = s.eigenvectors
        recon = max(recon, linalg.max_abs(s.reconstruct() - h))
        unit = max(unit, linalg.max_abs(v.conj().T @ v - np.eye(d)))
    record(
        "10a Jacobi residues",
        recon <= 1e-9 and unit <= 1e-9,
        f"1000 matrices, reconstruction {recon:.3g}, unitarity {unit:.3g}",
    )


def test_10_lemma_3_1():
    check_suite("10b support-projection equality", "lemma31_range", 300, 1e-6)


def test_11_continuity_in_s():
    check_suite("11a s -> 0 continuity", "continuity_s", 100, 1e-5)


def test_11_continuity_in_r():
    check_suite("11b r -> 1 continuity", "continuity_r", 100, 1e-4)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
