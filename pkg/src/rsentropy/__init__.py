"""Unified (r, s)-entropy and relative entropy for distributions and quantum states."""

from .classical import (
    ProbDist,
    power_sum,
    product_dist,
    relative_power_sum,
    unified_entropy,
    unified_rel_entropy,
    validate_dist,
)
from .params import Branch, EntropyParams
from .quantum import (
    DensityMatrix,
    DivergenceResult,
    kernel_inclusion,
    overlap,
    quantum_unified_entropy,
    quantum_unified_rel_entropy,
    umegaki_rel_entropy,
    validate_state,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "DensityMatrix",
    "DivergenceResult",
    "EntropyParams",
    "ProbDist",
    "kernel_inclusion",
    "overlap",
    "power_sum",
    "product_dist",
    "quantum_unified_entropy",
    "quantum_unified_rel_entropy",
    "relative_power_sum",
    "umegaki_rel_entropy",
    "unified_entropy",
    "unified_rel_entropy",
    "validate_dist",
    "validate_state",
]
