"""
Syntax tree of a construction script.

Nodes are frozen value objects. Source spans are excluded from equality so a
re-parsed pretty-printed program compares equal to the original.
"""

from dataclasses import dataclass, field
from typing import Literal


@dataclass(frozen=True, slots=True)
class SourceSpan:
    file: str | None = None
    line: int | None = None
    column: int | None = None


# Expressions


@dataclass(frozen=True, slots=True)
class ExprAst:
    span: SourceSpan | None = field(default=None, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class IntAst(ExprAst):
    value: int


@dataclass(frozen=True, slots=True)
class PhiAst(ExprAst):
    """The golden number (1 + √5)/2."""


@dataclass(frozen=True, slots=True)
class NameAst(ExprAst):
    """Reference to a ``let`` scalar."""

    name: str


BinaryOp = Literal["+", "-", "*", "/"]


@dataclass(frozen=True, slots=True)
class BinaryAst(ExprAst):
    op: BinaryOp
    left: ExprAst
    right: ExprAst


@dataclass(frozen=True, slots=True)
class NegAst(ExprAst):
    operand: ExprAst


@dataclass(frozen=True, slots=True)
class PowAst(ExprAst):
    base: ExprAst
    exponent: int


@dataclass(frozen=True, slots=True)
class SqrtAst(ExprAst):
    operand: ExprAst


PointFunc = Literal["dist", "dist2", "x", "y"]


@dataclass(frozen=True, slots=True)
class PointFuncAst(ExprAst):
    """``dist(P, Q)``, ``dist2(P, Q)``, ``x(P)`` or ``y(P)``."""

    func: PointFunc
    points: tuple[str, ...]


# Statements


@dataclass(frozen=True, slots=True)
class StatementAst:
    span: SourceSpan | None = field(default=None, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class PointDecl(StatementAst):
    name: str
    x: ExprAst
    y: ExprAst


@dataclass(frozen=True, slots=True)
class LineDecl(StatementAst):
    name: str
    p: str
    q: str


@dataclass(frozen=True, slots=True)
class CircleThroughDecl(StatementAst):
    name: str
    center: str
    through: str


@dataclass(frozen=True, slots=True)
class CircleRadiusDecl(StatementAst):
    """Compass transfer: ``circle ID = center C radius dist(P, Q)``."""

    name: str
    center: str
    p: str
    q: str


@dataclass(frozen=True, slots=True)
class SignFilter:
    axis: Literal["x", "y"] = "y"
    op: Literal[">", "<"] = ">"


@dataclass(frozen=True, slots=True)
class IntersectDecl(StatementAst):
    """
    ``point ID = intersect(A, B)[i] where y > 0``.

    ``index`` is None when omitted (selects 0). The filter applies to the
    canonical intersection list before indexing.
    """

    name: str
    first: str
    second: str
    index: int | None = None
    where: SignFilter | None = None


@dataclass(frozen=True, slots=True)
class LetDecl(StatementAst):
    name: str
    expr: ExprAst


MeasureKindAst = Literal["angle", "length"]


@dataclass(frozen=True, slots=True)
class MeasureDecl(StatementAst):
    """
    ``measure angle ID = angle(P, V, Q)`` (vertex in the middle) or
    ``measure length ID = dist(P, Q)``, optionally ``target NAME``.
    """

    kind: MeasureKindAst
    name: str
    points: tuple[str, ...]
    target: str | None = None


@dataclass(frozen=True, slots=True)
class AssertZeroDecl(StatementAst):
    expr: ExprAst


@dataclass(frozen=True, slots=True)
class MarkArcDecl(StatementAst):
    """Drawing-only arc of a named target angle from the ray CENTER→START."""

    name: str
    center: str
    start: str
    target: str


@dataclass(frozen=True, slots=True)
class ConstructionProgram:
    statements: tuple[StatementAst, ...] = ()
    file: str | None = field(default=None, compare=False)

    def declared(self) -> tuple[str, ...]:
        return tuple(name for s in self.statements if (name := getattr(s, "name", "")))
