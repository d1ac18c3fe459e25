"""Runtime limits, adjustable per process or per CLI invocation."""

from __future__ import annotations

import os

DEFAULT_DEGREE_CAP = 40
DEFAULT_POWER_BOUND = 30


class Limits:
    """Mutable holder so the CLI and tests can tighten or relax bounds."""

    def __init__(self):
        self.degree_cap = DEFAULT_DEGREE_CAP
        self.power_bound = int(os.environ.get("SINGULOCUS_POWER_BOUND", DEFAULT_POWER_BOUND))

    def reset(self):
        self.degree_cap = DEFAULT_DEGREE_CAP
        self.power_bound = DEFAULT_POWER_BOUND


LIMITS = Limits()


class DegreeOverflow(RuntimeError):
    """Raised when a basis computation produces an element above the degree cap."""

    def __init__(self, degree: int, cap: int):
        super().__init__(
            f"degree guard: basis element of total degree {degree} exceeds cap {cap}; "
            "raise the cap to continue"
        )
        self.degree = degree
        self.cap = cap


class UndeterminedAtBound(RuntimeError):
    """Raised when a bounded decision procedure runs out of budget without an answer."""

    def __init__(self, what: str, bound: int):
        super().__init__(f"{what}: undetermined at bound {bound}")
        self.what = what
        self.bound = bound
