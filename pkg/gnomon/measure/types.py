from collections.abc import Callable
from dataclasses import dataclass, field
from enum import auto
from typing import Any

from gnomon.tower import Interval
from gnomon.utils.enum import StrEnum

# precision in bits -> enclosure at that precision
Evaluator = Callable[[int], Interval]


class MeasureKind(StrEnum):
    ANGLE = auto()
    LENGTH = auto()
    RATIO = auto()


@dataclass(frozen=True, slots=True)
class Measurement:
    """
    A certified numeric result.

    ``decimal`` is correctly rounded to ``requested_digits`` places (or
    significant digits for error ratios): both ends of ``value`` round to it.
    The evaluator is kept so derived quantities can be re-certified.
    """

    name: str
    kind: MeasureKind
    value: Interval
    requested_digits: int
    decimal: str
    unit: str = ""

    target_name: str | None = None
    target_decimal: str | None = None
    abs_error: Interval | None = None
    abs_error_decimal: str | None = None
    rel_error: Interval | None = None
    rel_error_percent: str | None = None

    evaluator: Evaluator | None = field(default=None, compare=False, repr=False)

    @property
    def display(self) -> str:
        """Value with its unit, e.g. ``137.40 deg`` or ``0.08%``."""
        if self.unit == "%":
            return f"{self.decimal}%"
        return f"{self.decimal} {self.unit}".rstrip()

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "name": self.name,
            "kind": self.kind.value,
            "value_decimal": self.decimal,
            "unit": self.unit,
        }
        if self.target_decimal is not None:
            data["target_decimal"] = self.target_decimal
        if self.abs_error_decimal is not None:
            data["abs_error_decimal"] = self.abs_error_decimal
        if self.rel_error_percent is not None:
            data["rel_error_percent"] = self.rel_error_percent
        return data

    def with_target(self, target: "Measurement") -> "Measurement":
        """Copy with absolute and relative error against ``target`` certified at the same digits."""
        from gnomon.measure.compare import attach_target

        return attach_target(self, target)
