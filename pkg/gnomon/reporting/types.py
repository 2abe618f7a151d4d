from dataclasses import dataclass
from enum import auto
from typing import Any

from gnomon import GNOMON_VERSION
from gnomon.lang import AssertionOutcome
from gnomon.measure import Measurement
from gnomon.utils.enum import StrEnum


class RunStatus(StrEnum):
    """
    Outcome of a run:
      OK     → every assertion and check passed
      FAILED → at least one exact assertion or check failed
      ERROR  → the script did not parse or could not be executed
    """

    OK = auto()
    FAILED = auto()
    ERROR = auto()


@dataclass(frozen=True, slots=True)
class Fact:
    """A named check outside the script itself (e.g. the pentagon facts of verify-golden)."""

    name: str
    statement: str
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "statement": self.statement, "passed": self.passed}


@dataclass(frozen=True, slots=True)
class RunReport:
    program: str
    measurements: tuple[Measurement, ...] = ()
    assertions: tuple[AssertionOutcome, ...] = ()
    facts: tuple[Fact, ...] = ()
    errors: tuple[str, ...] = ()

    tool: str = "gnomon"
    version: str = GNOMON_VERSION

    @property
    def status(self) -> RunStatus:
        if self.errors:
            return RunStatus.ERROR
        if not all(a.passed for a in self.assertions) or not all(f.passed for f in self.facts):
            return RunStatus.FAILED
        return RunStatus.OK

    @property
    def assertions_failed(self) -> int:
        return sum(1 for a in self.assertions if not a.passed)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "program": self.program,
            "measurements": [m.to_dict() for m in self.measurements],
            "assertions": [a.to_dict() for a in self.assertions],
            "status": self.status.value,
        }
        if self.facts:
            data["facts"] = [f.to_dict() for f in self.facts]
        if self.errors:
            data["errors"] = list(self.errors)
        return data
