import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from gnomon.core.config import Settings
from gnomon.geometry import (
    Circle,
    GeometryError,
    Line,
    Point,
    circle_center_radius_of,
    circle_center_through,
    dist,
    dist2,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    line_through,
)
from gnomon.lang.ast import (
    AssertZeroDecl,
    BinaryAst,
    CircleRadiusDecl,
    CircleThroughDecl,
    ConstructionProgram,
    ExprAst,
    IntAst,
    IntersectDecl,
    LetDecl,
    LineDecl,
    MarkArcDecl,
    MeasureDecl,
    NameAst,
    NegAst,
    PhiAst,
    PointDecl,
    PointFuncAst,
    PowAst,
    SignFilter,
    SourceSpan,
    SqrtAst,
    StatementAst,
)
from gnomon.lang.errors import AssertionFailed, EvaluationError, LangError, NoSuchIntersection
from gnomon.measure import MeasureError, Measurement, central_angle, length, target_measurement
from gnomon.tower import FieldElement, Tower, TowerError

logger = logging.getLogger(__name__)

Value = Point | Line | Circle | FieldElement | Measurement


@dataclass(frozen=True, slots=True)
class ArcMark:
    """Reference arc of a named target angle, swept counter-clockwise from the ray center→start."""

    name: str
    center: Point
    start: Point
    target: str


@dataclass(frozen=True, slots=True)
class AssertionOutcome:
    span: SourceSpan | None
    passed: bool
    sign: int = 0

    @property
    def location(self) -> str:
        if self.span is None:
            return "<unknown>"
        return f"{self.span.file or '<input>'}:{self.span.line}:{self.span.column}"

    def to_dict(self) -> dict[str, object]:
        return {"location": self.location, "passed": self.passed}


@dataclass(frozen=True, slots=True)
class InterpretedModel:
    program: ConstructionProgram
    tower: Tower
    env: Mapping[str, Value]
    measurements: tuple[Measurement, ...] = ()
    assertions: tuple[AssertionOutcome, ...] = ()
    marks: tuple[ArcMark, ...] = ()
    digits: int = 2

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def failures(self) -> Iterator[AssertionFailed]:
        for a in self.assertions:
            if not a.passed:
                span = a.span or SourceSpan()
                yield AssertionFailed(a.sign, file=span.file, line=span.line, column=span.column)

    def point(self, name: str) -> Point:
        return self._typed(name, Point)

    def scalar(self, name: str) -> FieldElement:
        return self._typed(name, FieldElement)

    def measurement(self, name: str) -> Measurement:
        return self._typed(name, Measurement)

    def points(self) -> dict[str, Point]:
        return {k: v for k, v in self.env.items() if isinstance(v, Point)}

    def _typed(self, name: str, kind: type) -> "Value":
        value = self.env[name]
        if not isinstance(value, kind):
            raise TypeError(f"{name!r} is a {type(value).__name__}, not a {kind.__name__}")
        return value  # type: ignore[return-value]


@dataclass(slots=True)
class _Interpreter:
    program: ConstructionProgram
    digits: int
    settings: Settings
    tower: Tower = field(init=False)
    env: dict[str, Value] = field(default_factory=dict)
    measurements: list[Measurement] = field(default_factory=list)
    assertions: list[AssertionOutcome] = field(default_factory=list)
    marks: list[ArcMark] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.tower = Tower(precision=self.settings.precision)

    def run(self) -> InterpretedModel:
        for s in self.program.statements:
            if s.span is not None:
                logger.debug("line %s: %s", s.span.line, type(s).__name__)
            try:
                self._execute(s)
            except LangError:
                raise
            except (TowerError, GeometryError, MeasureError) as e:
                raise _evaluation_error(e, s.span) from e
        self.tower.freeze()
        logger.debug("construction finished; tower: %s", self.tower.describe())
        return InterpretedModel(
            program=self.program,
            tower=self.tower,
            env=MappingProxyType(dict(self.env)),
            measurements=tuple(self.measurements),
            assertions=tuple(self.assertions),
            marks=tuple(self.marks),
            digits=self.digits,
        )

    # Statements

    def _execute(self, s: StatementAst) -> None:
        match s:
            case PointDecl(name=name, x=x, y=y):
                self.env[name] = Point(self._eval(x), self._eval(y))
            case IntersectDecl():
                self.env[s.name] = self._intersect(s)
            case LineDecl(name=name, p=p, q=q):
                self.env[name] = line_through(self._point(p), self._point(q))
            case CircleThroughDecl(name=name, center=center, through=through):
                self.env[name] = circle_center_through(self._point(center), self._point(through))
            case CircleRadiusDecl(name=name, center=center, p=p, q=q):
                self.env[name] = circle_center_radius_of(self._point(center), self._point(p), self._point(q))
            case LetDecl(name=name, expr=expr):
                self.env[name] = self._eval(expr)
            case MeasureDecl():
                m = self._measure(s)
                self.env[s.name] = m
                self.measurements.append(m)
            case AssertZeroDecl(expr=expr):
                value = self._eval(expr)
                sign = value.sign()
                self.assertions.append(AssertionOutcome(span=s.span, passed=sign == 0, sign=sign))
            case MarkArcDecl(name=name, center=center, start=start, target=target):
                self.marks.append(ArcMark(name, self._point(center), self._point(start), target))
            case _:
                raise TypeError(f"unknown statement node: {type(s).__name__}")

    def _intersect(self, s: IntersectDecl) -> Point:
        a, b = self.env[s.first], self.env[s.second]
        candidates: list[Point]
        if isinstance(a, Line) and isinstance(b, Line):
            candidates = [intersect_line_line(a, b)]
        elif isinstance(a, Line) and isinstance(b, Circle):
            candidates = intersect_line_circle(a, b)
        elif isinstance(a, Circle) and isinstance(b, Line):
            candidates = intersect_line_circle(b, a)
        elif isinstance(a, Circle) and isinstance(b, Circle):
            candidates = intersect_circle_circle(a, b)
        else:
            raise TypeError(f"cannot intersect {type(a).__name__} with {type(b).__name__}")

        found = len(candidates)
        if s.where is not None:
            candidates = [p for p in candidates if _passes(p, s.where)]
        index = s.index or 0
        if index >= len(candidates):
            span = s.span or SourceSpan()
            where = "" if s.where is None else f" with {s.where.axis} {s.where.op} 0"
            raise NoSuchIntersection(
                f"no intersection #{index}{where} of '{s.first}' and '{s.second}' ({found} found)",
                file=span.file,
                line=span.line,
                column=span.column,
            )
        return candidates[index]

    def _measure(self, s: MeasureDecl) -> Measurement:
        precision = self.settings.precision
        if s.kind == "angle":
            p, v, q = (self._point(n) for n in s.points)
            m = central_angle(p, v, q, self.digits, name=s.name, precision=precision)
        else:
            p, q = (self._point(n) for n in s.points)
            m = length(p, q, self.digits, name=s.name, precision=precision)
        if s.target is not None:
            target = target_measurement(s.target, self.digits, unit=m.unit, precision=precision)
            m = m.with_target(target)
        return m

    # Expressions

    def _eval(self, e: ExprAst) -> FieldElement:
        try:
            return self._eval_node(e)
        except (TowerError, GeometryError) as err:
            raise _evaluation_error(err, e.span) from err

    def _eval_node(self, e: ExprAst) -> FieldElement:
        match e:
            case IntAst(value=value):
                return self.tower.rational(value)
            case PhiAst():
                return self.tower.phi()
            case NameAst(name=name):
                value = self.env[name]
                assert isinstance(value, FieldElement)
                return value
            case NegAst(operand=operand):
                return -self._eval(operand)
            case PowAst(base=base, exponent=exponent):
                return self._eval(base) ** exponent
            case SqrtAst(operand=operand):
                return self._eval(operand).sqrt()
            case BinaryAst(op=op, left=left, right=right):
                x, y = self._eval(left), self._eval(right)
                if op == "+":
                    return x + y
                if op == "-":
                    return x - y
                if op == "*":
                    return x * y
                return x / y
            case PointFuncAst(func="dist", points=(p, q)):
                return dist(self._point(p), self._point(q))
            case PointFuncAst(func="dist2", points=(p, q)):
                return dist2(self._point(p), self._point(q))
            case PointFuncAst(func="x", points=(p,)):
                return self._point(p).x
            case PointFuncAst(func="y", points=(p,)):
                return self._point(p).y
        raise TypeError(f"unknown expression node: {type(e).__name__}")

    def _point(self, name: str) -> Point:
        value = self.env[name]
        assert isinstance(value, Point)
        return value


def interpret(program: ConstructionProgram, digits: int = 2, settings: Settings | None = None) -> InterpretedModel:
    """
    Execute ``program`` against a fresh tower.

    Assertion outcomes are collected; geometry or arithmetic failures stop
    execution with an ``EvaluationError`` located at the offending statement.
    """
    return _Interpreter(program, digits, settings or Settings()).run()


def _passes(p: Point, where: SignFilter) -> bool:
    s = (p.x if where.axis == "x" else p.y).sign()
    return s > 0 if where.op == ">" else s < 0


def _evaluation_error(err: Exception, span: SourceSpan | None) -> EvaluationError:
    span = span or SourceSpan()
    code = getattr(err, "code", "error")
    return EvaluationError(
        str(err),
        file=span.file,
        line=span.line,
        column=span.column,
        details={"cause": code},
    )
