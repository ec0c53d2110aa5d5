"""The (r, s) parameter pair and its branch classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

BRANCH_EPS = 1e-9


class Branch(str, enum.Enum):
    R1 = "R1"  # r == 1: Shannon / von Neumann / Umegaki
    S0 = "S0"  # s == 0: Renyi
    GEN = "GEN"


@dataclass(frozen=True)
class EntropyParams:
    """Order ``r`` and degree ``s`` of the unified entropy family.

    Only three evaluation branches exist. Tsallis (``s == 1``) and type-r
    (``s == 1/r``) parameters are recognised by :attr:`label` but are
    evaluated by the general formula, which reduces to them exactly.
    """

    r: float
    s: float
    branch_eps: float = BRANCH_EPS

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.s)):
            raise ValueError(f"r and s must be finite, got r={self.r}, s={self.s}")

    @property
    def branch(self) -> Branch:
        if abs(self.r - 1.0) <= self.branch_eps:
            return Branch.R1
        if abs(self.s) <= self.branch_eps:
            return Branch.S0
        return Branch.GEN

    @property
    def label(self) -> str:
        branch = self.branch
        if branch is Branch.R1:
            return "shannon"
        if branch is Branch.S0:
            return "renyi"
        if abs(self.s - 1.0) <= self.branch_eps:
            return "tsallis"
        if self.r > 0 and abs(self.s - 1.0 / self.r) <= self.branch_eps:
            return "type-r"
        return "unified"
