from fractions import Fraction as Rational

from gnomon.tower.element import FieldElement, Scalar
from gnomon.tower.errors import (
    DivisionByZero,
    NegativeRadicand,
    PrecisionExhausted,
    TowerError,
    TowerFrozen,
    TowerMismatch,
)
from gnomon.tower.interval import Interval
from gnomon.tower.tower import Tower

__all__ = [
    "Rational",
    "Tower",
    "FieldElement",
    "Scalar",
    "Interval",
    # Errors
    "TowerError",
    "DivisionByZero",
    "NegativeRadicand",
    "TowerMismatch",
    "TowerFrozen",
    "PrecisionExhausted",
]
