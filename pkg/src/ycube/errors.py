"""Exception types shared across the package."""

from __future__ import annotations


class YcubeError(Exception):
    """Base class for all package-specific errors."""


class SphericalPairError(YcubeError):
    """Raised for a {p,q} pair with positive curvature (1/p + 1/q > 1/2)."""


class UnsupportedLatticeError(YcubeError):
    """Raised when an operation is asked for on a lattice it is not defined on."""


class BudgetExceededError(YcubeError):
    """Raised when a construction would exceed the configured vertex budget."""


class ConstructionError(YcubeError):
    """Raised when an operator constructor cannot meet its advertised syndrome.

    Carries the offending term locations so callers can report them.
    """

    def __init__(self, message: str, offending=None):
        super().__init__(message)
        self.offending = list(offending) if offending is not None else []
