from dataclasses import dataclass
from enum import auto
from typing import Any

from gnomon.oracle.factor import Factorization
from gnomon.utils.enum import StrEnum


class SubjectKind(StrEnum):
    NGON = auto()
    RATIONAL_ANGLE = auto()
    GOLDEN_ANGLE = auto()


class ReasonKind(StrEnum):
    FERMAT_FACTORIZATION = auto()
    REPEATED_FERMAT_PRIME = auto()
    NON_FERMAT_PRIME = auto()
    TRIVIAL_ANGLE = auto()
    DOCUMENTED_TRANSCENDENCE = auto()


@dataclass(frozen=True, slots=True)
class Subject:
    kind: SubjectKind
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __str__(self) -> str:
        if self.kind is SubjectKind.NGON:
            return f"regular {self.n}-gon"
        if self.kind is SubjectKind.RATIONAL_ANGLE:
            return f"angle 2π·{self.p}/{self.q}"
        return "golden angle"


@dataclass(frozen=True, slots=True)
class Reason:
    """
    Why a verdict was reached.

    ``computed`` is False only for the golden angle, whose verdict rests on a
    transcendence theorem this package records but cannot decide.
    """

    kind: ReasonKind
    text: str
    factorization: Factorization = ()
    offending_prime: int | None = None
    computed: bool = True
    citation: str | None = None


@dataclass(frozen=True, slots=True)
class ConstructibilityVerdict:
    subject: Subject
    constructible: bool
    reason: Reason
    totient: int | None = None

    def describe(self) -> str:
        return f"{'yes' if self.constructible else 'no'} — {self.reason.text}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": str(self.subject),
            "constructible": self.constructible,
            "reason": {
                "kind": self.reason.kind.value,
                "text": self.reason.text,
                "factorization": [list(f) for f in self.reason.factorization],
                "offending_prime": self.reason.offending_prime,
                "computed": self.reason.computed,
                "citation": self.reason.citation,
            },
            "totient": self.totient,
        }
