"""Randomised checks of every inequality and identity about the unified entropies.

Each suite draws ``trials`` independent instances. Trial ``k`` of suite
``name`` run with seed ``seed`` uses the generator
``default_rng([seed, crc32(name), k])``, so reports do not depend on trial
order and are reproducible bit for bit.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .. import classical as cl
from .. import linalg
from .. import quantum as qu
from ..channels import apply_channel, random_channel, random_unitary, unitary_channel
from ..errors import UnknownSuite
from ..params import EntropyParams
from .generators import diag_state, rand_dist, rand_psd, rand_state, rand_state_within

MAX_RECORDED_FAILURES = 50

R_GRID = tuple(round(0.05 * k, 2) for k in range(21))
S_GRID = (-2.0, -1.0, -0.5, -1e-6, 0.0, 1e-6, 0.5, 1.0)
CLASSICAL_R_GRID = R_GRID[1:] + (1.5, 2.0, 3.0)
MAX_TYPE_R_S = 10.0


def _always(r, s):
    return True


def _dpi_region(r, s):
    return r == 1 or (0 <= r < 1 and s <= 1)


def _sandwich_region(r, s):
    return r == 1 or (0 <= r < 1 and s >= 0)


def _classical_convex_region(r, s):
    return r == 1 or (r > 1 and s >= 1) or (0 < r < 1 and s <= 1)


@dataclass(frozen=True)
class ParamGrid:
    """Grid of (r, s) points restricted to a hypothesis region.

    With ``add_type_r`` every ``r > 0`` also gets the point ``s = 1/r`` when
    ``1/r <= 10``.
    """

    r_values: tuple = R_GRID
    s_values: tuple = S_GRID
    region: Callable[[float, float], bool] = _always
    add_type_r: bool = True

    def s_for(self, r: float) -> list:
        s_list = list(self.s_values)
        if self.add_type_r and r > 0 and 1.0 / r <= MAX_TYPE_R_S:
            inv = 1.0 / r
            if all(abs(inv - s) > 1e-12 for s in s_list):
                s_list.append(inv)
        return sorted(s for s in s_list if self.region(r, s))

    def points(self) -> Iterator[tuple]:
        for r in self.r_values:
            for s in self.s_for(r):
                yield r, s

    def restrict(self, region) -> "ParamGrid":
        both = lambda r, s: self.region(r, s) and region(r, s)  # noqa: E731
        return ParamGrid(self.r_values, self.s_values, both, self.add_type_r)


@dataclass
class SuiteReport:
    suite_name: str
    trials: int
    tol: float
    max_violation: float = -math.inf
    checks: int = 0
    failure_count: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json(self) -> dict:
        from ..io import encode_number

        return {
            "suite": self.suite_name,
            "trials": self.trials,
            "tol": self.tol,
            "checks": self.checks,
            "max_violation": encode_number(self.max_violation),
            "passed": self.passed,
            "failure_count": self.failure_count,
            "skipped": self.skipped,
            "failures": [
                {**f, "lhs": encode_number(f["lhs"]), "rhs": encode_number(f["rhs"])}
                for f in self.failures
            ],
        }


def _leq_violation(lhs: float, rhs: float) -> float:
    if rhs == math.inf or lhs == -math.inf:
        return -math.inf
    if lhs == math.inf or rhs == -math.inf:
        return math.inf
    return lhs - rhs


def _eq_violation(lhs: float, rhs: float) -> float:
    if math.isinf(lhs) or math.isinf(rhs):
        return 0.0 if lhs == rhs else math.inf
    return abs(lhs - rhs) / max(1.0, abs(rhs))


class _Recorder:
    def __init__(self, report: SuiteReport, seed):
        self.report = report
        self.seed = seed
        self.trial = 0

    def _record(self, violation, lhs, rhs, claim, params):
        rep = self.report
        rep.checks += 1
        if math.isnan(violation):
            violation = math.inf
        rep.max_violation = max(rep.max_violation, violation)
        if violation > rep.tol:
            rep.failure_count += 1
            if len(rep.failures) < MAX_RECORDED_FAILURES:
                rep.failures.append(
                    {
                        "seed": self.seed,
                        "trial": self.trial,
                        "claim": claim,
                        "params": {k: _plain(v) for k, v in params.items()},
                        "lhs": float(lhs),
                        "rhs": float(rhs),
                    }
                )

    def leq(self, lhs, rhs, claim="<=", **params):
        self._record(_leq_violation(lhs, rhs), lhs, rhs, claim, params)

    def eq(self, lhs, rhs, claim="==", **params):
        self._record(_eq_violation(lhs, rhs), lhs, rhs, claim, params)

    def positive(self, value, floor=1e-10, claim="> 0", **params):
        # violation exceeds tol exactly when value < floor
        self._record(self.report.tol + floor - value, value, floor, claim, params)

    def skip(self):
        self.report.skipped += 1


def _plain(v):
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, tuple):
        return list(v)
    return v


# ---------------------------------------------------------------- helpers


def _choice(rng, values):
    return values[int(rng.integers(len(values)))]


def _rank(rng, dim, full_fraction=0.5):
    if dim == 1 or rng.random() < full_fraction:
        return dim
    return int(rng.integers(1, dim))


def _E(rho, sigma, r, s):
    return qu.quantum_unified_rel_entropy(rho, sigma, EntropyParams(r, s)).value


def _Ec(a, b, r, s):
    return cl.unified_rel_entropy(a, b, EntropyParams(r, s))


# ---------------------------------------------------------------- classical


def _classical_nonneg(rng, rec, grid, dims):
    n = _choice(rng, dims)
    a, b = rand_dist(n, rng), rand_dist(n, rng)
    for r, s in grid.points():
        rec.leq(0.0, _Ec(a, b, r, s), claim="E(A||B) >= 0", r=r, s=s, n=n)
        rec.leq(_Ec(a, a, r, s), 1e-10, claim="E(A||A) <= 1e-10", r=r, s=s, n=n)


def _classical_nonadd(rng, rec, grid, dims):
    n, m = _choice(rng, dims), _choice(rng, dims)
    a1, a2 = rand_dist(n, rng), rand_dist(n, rng)
    b1, b2 = rand_dist(m, rng), rand_dist(m, rng)
    pa, pb = cl.product_dist(a1, b1), cl.product_dist(a2, b2)
    for r, s in grid.points():
        ea, eb = _Ec(a1, a2, r, s), _Ec(b1, b2, r, s)
        rhs = ea + eb + (r - 1) * s * ea * eb
        rec.eq(_Ec(pa, pb, r, s), rhs, claim="nonadditivity", r=r, s=s, n=n, m=m)


def _classical_convex(rng, rec, grid, dims):
    n = _choice(rng, dims)
    a1, a2, b1, b2 = (rand_dist(n, rng) for _ in range(4))
    lam = float(rng.uniform(0.01, 0.99))
    a, b = cl.mix(lam, a1, a2), cl.mix(lam, b1, b2)
    for r, s in grid.points():
        rhs = lam * _Ec(a1, b1, r, s) + (1 - lam) * _Ec(a2, b2, r, s)
        rec.leq(_Ec(a, b, r, s), rhs, claim="joint convexity", r=r, s=s, lam=lam)


def _thm21_sandwich(rng, rec, grid, dims):
    n = _choice(rng, dims)
    a, b = rand_dist(n, rng), rand_dist(n, rng)
    kl = cl.kl_divergence(a, b)
    for r, s in grid.points():
        rec.leq(_Ec(a, b, r, s), kl, claim="E_r <= H", r=r, s=s)
        rec.leq(kl, _Ec(a, b, 2 - r, s), claim="H <= E_(2-r)", r=r, s=s)


# ---------------------------------------------------------------- quantum


def _q_nonneg(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d), rng)
    if rng.random() < 0.5:
        sigma = rand_state_within(rho.support, _rank(rng, rho.spectral.rank, 0.3), rng)
    else:
        sigma = rand_state(d, _rank(rng, d), rng)
    included = qu.kernel_inclusion(rho, sigma)
    distinct = qu.trace_distance(rho, sigma) > 0.01
    for r in grid.r_values:
        if r < 1:
            x = qu.overlap(rho, sigma, r)
            rec.leq(0.0, x, claim="overlap >= 0", r=r)
            rec.leq(x, 1.0, claim="overlap <= 1", r=r)
        for s in grid.s_for(r):
            e = _E(rho, sigma, r, s)
            rec.leq(0.0, e, claim="E >= 0", r=r, s=s)
            rec.leq(_E(rho, rho, r, s), 1e-10, claim="E(rho||rho) = 0", r=r, s=s)
            if r == 0:
                if included:
                    rec.eq(e, 0.0, claim="r=0, Ker inclusion => E = 0", s=s)
                else:
                    rec.positive(e, claim="r=0, no Ker inclusion => E > 0", s=s)
            elif distinct:
                rec.positive(e, claim="0<r<=1, rho != sigma => E > 0", r=r, s=s)


def _q_joint_convex(rng, rec, grid, dims):
    d = _choice(rng, dims)
    states = [rand_state(d, _rank(rng, d, 0.7), rng) for _ in range(4)]
    rho1, rho2, sigma1, sigma2 = states
    lam = float(rng.uniform(0.01, 0.99))
    rho = qu.mix((lam, 1 - lam), (rho1, rho2))
    sigma = qu.mix((lam, 1 - lam), (sigma1, sigma2))
    for r, s in grid.points():
        rhs = lam * _E(rho1, sigma1, r, s) + (1 - lam) * _E(rho2, sigma2, r, s)
        rec.leq(_E(rho, sigma, r, s), rhs, claim="joint convexity", r=r, s=s, lam=lam)


def _q_unitary(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    u = unitary_channel(random_unitary(d, rng))
    urho, usigma = apply_channel(u, rho), apply_channel(u, sigma)
    for r, s in grid.points():
        rec.eq(_E(urho, usigma, r, s), _E(rho, sigma, r, s), claim="unitary invariance", r=r, s=s)


def _q_additivity(rng, rec, grid, dims):
    d1, d2 = _choice(rng, dims)
    rho1, sigma1 = rand_state(d1, None, rng), rand_state(d1, None, rng)
    rho2, sigma2 = rand_state(d2, None, rng), rand_state(d2, None, rng)
    rho, sigma = qu.tensor(rho1, rho2), qu.tensor(sigma1, sigma2)
    for r, s in grid.points():
        e1, e2 = _E(rho1, sigma1, r, s), _E(rho2, sigma2, r, s)
        rhs = e1 + e2 + (r - 1) * s * e1 * e2
        rec.eq(_E(rho, sigma, r, s), rhs, claim="tensor nonadditivity", r=r, s=s, dims=(d1, d2))


def _lemma31_range(rng, rec, grid, dims):
    d = _choice(rng, dims)
    a = rand_psd(d, int(rng.integers(1, d + 1)), rng)
    b = rand_psd(d, int(rng.integers(1, d + 1)), rng)
    lam, mu = rng.uniform(0.1, 10.0, size=2)
    p = linalg.support_projection(linalg.jacobi_eig(lam * a + mu * b))
    q = linalg.support_projection(linalg.jacobi_eig(a + b))
    rec.eq(linalg.max_abs(p - q), 0.0, claim="R(lam A + mu B) = R(A + B)", lam=lam, mu=mu, d=d)


def _dpi_channel(rng, rec, grid, dims):
    d = _choice(rng, dims)
    phi = random_channel(d, int(rng.integers(1, 5)), rng)
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    prho, psigma = apply_channel(phi, rho), apply_channel(phi, sigma)
    kraus = len(phi.kraus_ops)
    for r, s in grid.points():
        rec.leq(_E(prho, psigma, r, s), _E(rho, sigma, r, s), claim="channel DPI", r=r, s=s, d=d, kraus=kraus)


def _dpi_partial_trace(rng, rec, grid, dims):
    d1, d2 = _choice(rng, dims)
    d = d1 * d2
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    rho1 = qu.validate_state(linalg.partial_trace(rho.matrix, d1, d2, keep=1))
    sigma1 = qu.validate_state(linalg.partial_trace(sigma.matrix, d1, d2, keep=1))
    for r, s in grid.points():
        rec.leq(_E(rho1, sigma1, r, s), _E(rho, sigma, r, s), claim="partial trace DPI", r=r, s=s, dims=(d1, d2))


def _thm34_sandwich(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d), rng)
    sigma = rand_state(d, None, rng)
    h = qu.umegaki_rel_entropy(rho, sigma)
    for r, s in grid.points():
        rec.leq(_E(rho, sigma, r, s), h, claim="E_r <= H", r=r, s=s)
        rec.leq(h, _E(rho, sigma, 2 - r, s), claim="H <= E_(2-r)", r=r, s=s)


def _thm35_r_monotone(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    rs = sorted(r for r in grid.r_values if r < 1)
    if min(qu.overlap(rho, sigma, r) for r in rs) < 1e-10:
        rec.skip()
        return
    h = qu.umegaki_rel_entropy(rho, sigma)
    for s in grid.s_values:
        values = [_E(rho, sigma, r, s) for r in rs]
        for k in range(len(rs) - 1):
            lo, hi = values[k], values[k + 1]
            if s >= 0:
                rec.leq(lo, hi, claim="s>=0: increasing in r", r=(rs[k], rs[k + 1]), s=s)
            else:
                rec.leq(hi, lo, claim="s<0: decreasing in r", r=(rs[k], rs[k + 1]), s=s)
        if s >= 0 and 1.0 in grid.r_values:
            rec.leq(values[-1], h, claim="s>=0: E_r <= E_1 = H", r=(rs[-1], 1.0), s=s)


def _thm35_s_monotone(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    for r in grid.r_values:
        ss = grid.s_for(r)
        values = [_E(rho, sigma, r, s) for s in ss]
        for k in range(len(ss) - 1):
            rec.leq(values[k + 1], values[k], claim="decreasing in s", r=r, s=(ss[k], ss[k + 1]))


def _thm35_s_convex(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, _rank(rng, d, 0.7), rng)
    sigma = rand_state(d, _rank(rng, d, 0.7), rng)
    for r in grid.r_values:
        ss = grid.s_for(r)
        values = {s: _E(rho, sigma, r, s) for s in ss}
        for i, s1 in enumerate(ss):
            for s2 in ss[i + 1:]:
                mid = _E(rho, sigma, r, 0.5 * (s1 + s2))
                rhs = 0.5 * (values[s1] + values[s2])
                rec.leq(mid, rhs, claim="midpoint convex in s", r=r, s=(s1, s2))


def _thm35_r0(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho = rand_state(d, None, rng)
    sigma = rand_state(d, _rank(rng, d), rng)
    for s in grid.s_for(0.0):
        rec.eq(_E(rho, sigma, 0.0, s), 0.0, claim="E_0 = 0 for invertible rho", s=s)


def _eq15_scalar(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho, sigma = rand_state(d, None, rng), rand_state(d, None, rng)
    for r in grid.r_values:
        if not 0 < r < 1:
            continue
        x = qu.overlap(rho, sigma, r)
        lhs = -(1 - r) * qu.log_derivative_trace(rho, sigma, r)
        rec.leq(x * math.log(x), lhs, claim="x ln x <= -(1-r) tr(rho^r (ln rho - ln sigma) sigma^(1-r))", r=r)


def ds_closed_form(x: float, r: float, s: float) -> float:
    """d/ds of the general branch at overlap ``x``."""
    log_x = math.log(x)
    num = math.expm1(s * log_x) - s * log_x * math.exp(s * log_x)
    return num / ((1 - r) * s * s)


def dr_closed_form(e: float, x: float, t: float, r: float, s: float) -> float:
    """d/dr of the S0 or GEN branch; ``t`` is the r-derivative of the overlap."""
    if s == 0:
        return e / (1 - r) - t / ((1 - r) * x)
    return e / (1 - r) - x ** (s - 1) * t / (1 - r)


FD_STEP = 1e-5


def _thm35_derivatives(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho, sigma = rand_state(d, None, rng), rand_state(d, None, rng)
    h = FD_STEP
    for r in grid.r_values:
        if r >= 1:
            continue
        x = qu.overlap(rho, sigma, r)
        t = qu.log_derivative_trace(rho, sigma, r)
        for s in grid.s_for(r):
            if abs(s) > 1e-3:
                fd = (_E(rho, sigma, r, s + h) - _E(rho, sigma, r, s - h)) / (2 * h)
                rec.eq(ds_closed_form(x, r, s), fd, claim="dE/ds closed form", r=r, s=s)
            if r >= h and (s == 0 or abs(s) > 1e-3):
                fd = (_E(rho, sigma, r + h, s) - _E(rho, sigma, r - h, s)) / (2 * h)
                e = _E(rho, sigma, r, s)
                rec.eq(dr_closed_form(e, x, t, r, s), fd, claim="dE/dr closed form", r=r, s=s)


# ---------------------------------------------------------------- oracles


def _commuting_reduction(rng, rec, grid, dims):
    d = _choice(rng, dims)
    a, b = rand_dist(d, rng), rand_dist(d, rng)
    if rng.random() < 0.5:
        rho, sigma = diag_state(a.weights), diag_state(b.weights)
        rotated = False
    else:
        u = random_unitary(d, rng)
        rho = qu.validate_state(u @ np.diag(a.weights) @ u.conj().T)
        sigma = qu.validate_state(u @ np.diag(b.weights) @ u.conj().T)
        rotated = True
    for r, s in grid.points():
        if r == 0:
            continue
        rec.eq(_E(rho, sigma, r, s), _Ec(a, b, r, s), claim="quantum == classical", r=r, s=s, d=d, rotated=rotated)


CONTINUITY_DELTA = 1e-6


def _continuity_s(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho, sigma = rand_state(d, None, rng), rand_state(d, None, rng)
    for r in grid.r_values:
        if r >= 1:
            continue
        renyi = _E(rho, sigma, r, 0.0)
        for s in (CONTINUITY_DELTA, -CONTINUITY_DELTA):
            rec.eq(_E(rho, sigma, r, s), renyi, claim="GEN -> S0 as s -> 0", r=r, s=s)


def _continuity_r(rng, rec, grid, dims):
    d = _choice(rng, dims)
    rho, sigma = rand_state(d, None, rng), rand_state(d, None, rng)
    h = qu.umegaki_rel_entropy(rho, sigma)
    for s in grid.s_values:
        for r in (1 - CONTINUITY_DELTA, 1 + CONTINUITY_DELTA):
            rec.eq(_E(rho, sigma, r, s), h, claim="E_r -> H as r -> 1", r=r, s=s)


@dataclass(frozen=True)
class SuiteSpec:
    run: Callable
    grid: ParamGrid
    dims: tuple
    tol: float
    description: str


SINGLE_DIMS = (2, 3, 4, 5, 6)
BIPARTITE_DIMS = ((2, 2), (2, 3))

SUITES = {
    "classical_nonneg": SuiteSpec(
        _classical_nonneg, ParamGrid(CLASSICAL_R_GRID), tuple(range(2, 9)), 1e-10,
        "E_r^s(A||B) >= 0 with equality at A = B",
    ),
    "classical_nonadd": SuiteSpec(
        _classical_nonadd, ParamGrid(CLASSICAL_R_GRID), (2, 3, 4), 1e-9,
        "E(A1*B1||A2*B2) = E1 + E2 + (r-1)s E1 E2",
    ),
    "classical_convex": SuiteSpec(
        _classical_convex, ParamGrid(CLASSICAL_R_GRID, region=_classical_convex_region),
        tuple(range(2, 9)), 1e-9, "joint convexity in (A, B)",
    ),
    "thm21_sandwich": SuiteSpec(
        _thm21_sandwich, ParamGrid(R_GRID[1:], region=_sandwich_region),
        tuple(range(2, 9)), 1e-9, "E_r^s <= H <= E_(2-r)^s",
    ),
    "q_nonneg": SuiteSpec(
        _q_nonneg, ParamGrid(), SINGLE_DIMS, 1e-9,
        "overlap in [0,1], E >= 0, faithfulness, r = 0 kernel criterion",
    ),
    "q_joint_convex": SuiteSpec(
        _q_joint_convex, ParamGrid(region=_dpi_region), SINGLE_DIMS, 1e-8,
        "joint convexity of E_r^s",
    ),
    "q_unitary": SuiteSpec(
        _q_unitary, ParamGrid(), SINGLE_DIMS, 1e-9, "unitary invariance",
    ),
    "q_additivity": SuiteSpec(
        _q_additivity, ParamGrid(), BIPARTITE_DIMS, 1e-9, "tensor-product nonadditivity",
    ),
    "lemma31_range": SuiteSpec(
        _lemma31_range, ParamGrid((1.0,), (0.0,), add_type_r=False), SINGLE_DIMS, 1e-6,
        "range of lam A + mu B equals range of A + B",
    ),
    "dpi_channel": SuiteSpec(
        _dpi_channel, ParamGrid(region=_dpi_region), (2, 3, 4), 1e-8,
        "data processing under random Kraus channels",
    ),
    "dpi_partial_trace": SuiteSpec(
        _dpi_partial_trace, ParamGrid(region=_dpi_region), BIPARTITE_DIMS, 1e-8,
        "monotonicity under partial trace",
    ),
    "thm34_sandwich": SuiteSpec(
        _thm34_sandwich, ParamGrid(region=_sandwich_region), SINGLE_DIMS, 1e-8,
        "E_r^s <= H <= E_(2-r)^s for invertible sigma",
    ),
    "thm35_r_monotone": SuiteSpec(
        _thm35_r_monotone, ParamGrid(add_type_r=False), SINGLE_DIMS, 1e-8,
        "increasing in r for s >= 0, decreasing for s < 0",
    ),
    "thm35_s_monotone": SuiteSpec(
        _thm35_s_monotone, ParamGrid(), SINGLE_DIMS, 1e-8, "decreasing in s",
    ),
    "thm35_s_convex": SuiteSpec(
        _thm35_s_convex, ParamGrid(), SINGLE_DIMS, 1e-8, "convex in s",
    ),
    "thm35_r0": SuiteSpec(
        _thm35_r0, ParamGrid(), SINGLE_DIMS, 1e-10, "E_0^s = 0 for invertible rho",
    ),
    "eq15_scalar": SuiteSpec(
        _eq15_scalar, ParamGrid(add_type_r=False), SINGLE_DIMS, 1e-9,
        "x ln x bound on the overlap derivative",
    ),
    "thm35_derivatives": SuiteSpec(
        _thm35_derivatives, ParamGrid(), SINGLE_DIMS, 1e-4,
        "closed-form dE/ds and dE/dr against central differences",
    ),
    "commuting_reduction": SuiteSpec(
        _commuting_reduction, ParamGrid(R_GRID[1:] + (1.5, 2.0)), SINGLE_DIMS, 1e-10,
        "commuting states reduce to the classical divergence",
    ),
    "continuity_s": SuiteSpec(
        _continuity_s, ParamGrid(add_type_r=False), SINGLE_DIMS, 1e-5,
        "general branch tends to the Renyi branch as s -> 0",
    ),
    "continuity_r": SuiteSpec(
        _continuity_r, ParamGrid(add_type_r=False), SINGLE_DIMS, 1e-4,
        "E_r^s tends to the Umegaki entropy as r -> 1",
    ),
}


def run_suite(
    name: str,
    trials: int = 100,
    dims=None,
    grid: ParamGrid | None = None,
    tol: float | None = None,
    seed: int = 0,
) -> SuiteReport:
    """Run ``trials`` seeded instances of suite ``name`` over every grid point."""
    try:
        spec = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    grid = spec.grid if grid is None else grid.restrict(spec.grid.region)
    dims = tuple(spec.dims if dims is None else dims)
    report = SuiteReport(name, trials, spec.tol if tol is None else tol)
    rec = _Recorder(report, seed)
    tag = zlib.crc32(name.encode())
    for k in range(trials):
        rec.trial = k
        spec.run(np.random.default_rng([seed, tag, k]), rec, grid, dims)
    return report


def run_all(trials: int = 100, seed: int = 0) -> list:
    return [run_suite(name, trials=trials, seed=seed) for name in SUITES]
