from collections.abc import Mapping
from typing import Any


class TowerError(Exception):
    """
    Base class for exact-arithmetic failures.

    These surface to users through the construction language, which attaches
    the statement location before reporting them.
    """

    code: str = "tower_error"

    def __init__(self, message: str, *, details: Mapping[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self) -> str:
        return self.message


class DivisionByZero(TowerError):
    """Raised when dividing by an element whose coordinate vector is all zeros."""

    code = "division_by_zero"


class NegativeRadicand(TowerError):
    """Raised when taking the square root of a negative element."""

    code = "negative_radicand"


class TowerMismatch(TowerError):
    """Raised when combining elements that belong to different towers."""

    code = "tower_mismatch"


class TowerFrozen(TowerError):
    """Raised when a frozen tower would have to grow."""

    code = "tower_frozen"


class PrecisionExhausted(TowerError):
    """
    Internal invariant error: interval refinement passed the configured ceiling.

    For nonzero tower elements this cannot happen in practice; it guards against
    misuse such as certifying a decimal on a rounding boundary with no exact
    equality test to settle it.
    """

    code = "precision_exhausted"
