from dataclasses import dataclass
from pathlib import Path
from typing import NoReturn, Protocol

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
from gnomon.lang.errors import (
    DuplicateIdentifier,
    EuclidSyntaxError,
    KindMismatch,
    UnknownTarget,
    UseBeforeDeclaration,
)
from gnomon.lang.lexer import Token, TokenKind, tokenize
from gnomon.measure import TARGETS, MeasureKind

# Kinds of declared identifiers, checked while parsing
POINT, LINE, CIRCLE, SCALAR, MEASUREMENT, MARK = "point", "line", "circle", "scalar", "measurement", "mark"

STATEMENT_KEYWORDS = ("point", "line", "circle", "let", "measure", "assert_zero", "mark")


class ScriptParser(Protocol):
    """Parse ``.euclid`` construction scripts into a ConstructionProgram."""

    def parse_text(self, text: str, *, filename: str | None = None) -> ConstructionProgram:
        raise NotImplementedError()

    def parse_file(self, path: str | Path) -> ConstructionProgram:
        raise NotImplementedError()


@dataclass(frozen=True, slots=True)
class DefaultScriptParser:
    """
    Recursive-descent parser for the construction language.

    One statement per line; ``#`` starts a comment. Identifiers must be
    declared before use and never redeclared; argument kinds are checked here
    so interpretation only fails on geometry.
    """

    def parse_file(self, path: str | Path) -> ConstructionProgram:
        p = Path(path)
        return self.parse_text(p.read_text(encoding="utf-8"), filename=str(p))

    def parse_text(self, text: str, *, filename: str | None = None) -> ConstructionProgram:
        return _Parser(tokenize(text, filename=filename), filename).program()


def parse(text: str, *, filename: str | None = None) -> ConstructionProgram:
    return DefaultScriptParser().parse_text(text, filename=filename)


def parse_file(path: str | Path) -> ConstructionProgram:
    return DefaultScriptParser().parse_file(path)


class _Parser:
    def __init__(self, tokens: list[Token], filename: str | None) -> None:
        self._tokens = tokens
        self._pos = 0
        self._file = filename
        self._kinds: dict[str, str] = {}

    # Token helpers

    @property
    def _tok(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        tok = self._tok
        if tok.kind is not TokenKind.EOF:
            self._pos += 1
        return tok

    def _fail(self, *expected: str, at: Token | None = None) -> NoReturn:
        tok = at or self._tok
        raise EuclidSyntaxError(
            expected,
            file=self._file,
            line=tok.line,
            column=tok.column,
            details={"found": tok.describe()},
        )

    def _expect(self, text: str) -> Token:
        if not self._tok.is_(text):
            self._fail(f"'{text}'")
        return self._advance()

    def _accept(self, text: str) -> bool:
        if self._tok.is_(text):
            self._advance()
            return True
        return False

    def _expect_name(self) -> Token:
        if self._tok.kind is not TokenKind.NAME:
            self._fail("identifier")
        return self._advance()

    def _span(self, tok: Token) -> SourceSpan:
        return SourceSpan(file=self._file, line=tok.line, column=tok.column)

    # Identifier bookkeeping

    def _declare(self, tok: Token, kind: str) -> str:
        if tok.text in self._kinds:
            raise DuplicateIdentifier(tok.text, file=self._file, line=tok.line, column=tok.column)
        self._kinds[tok.text] = kind
        return tok.text

    def _ref(self, *kinds: str) -> str:
        tok = self._expect_name()
        actual = self._kinds.get(tok.text)
        if actual is None:
            raise UseBeforeDeclaration(tok.text, file=self._file, line=tok.line, column=tok.column)
        if actual not in kinds:
            raise KindMismatch(tok.text, " or ".join(kinds), actual, file=self._file, line=tok.line, column=tok.column)
        return tok.text

    def _target(self, kind: MeasureKind) -> str:
        tok = self._expect_name()
        target = TARGETS.get(tok.text)
        loc = {"file": self._file, "line": tok.line, "column": tok.column}
        if target is None:
            raise UnknownTarget(tok.text, **loc)
        if target.kind is not kind:
            raise KindMismatch(tok.text, f"{kind.value} target", f"{target.kind.value} target", **loc)
        return tok.text

    # Program

    def program(self) -> ConstructionProgram:
        statements: list[StatementAst] = []
        while self._tok.kind is not TokenKind.EOF:
            if self._tok.kind is TokenKind.NEWLINE:
                self._advance()
                continue
            statements.append(self._statement())
            if self._tok.kind is not TokenKind.EOF:
                if self._tok.kind is not TokenKind.NEWLINE:
                    self._fail("end of line")
                self._advance()
        return ConstructionProgram(statements=tuple(statements), file=self._file)

    def _statement(self) -> StatementAst:
        tok = self._tok
        if tok.is_("point"):
            return self._point()
        if tok.is_("line"):
            return self._line()
        if tok.is_("circle"):
            return self._circle()
        if tok.is_("let"):
            return self._let()
        if tok.is_("measure"):
            return self._measure()
        if tok.is_("assert_zero"):
            return self._assert_zero()
        if tok.is_("mark"):
            return self._mark()
        self._fail(*(f"'{k}'" for k in STATEMENT_KEYWORDS))

    def _point(self) -> StatementAst:
        start = self._advance()
        name_tok = self._expect_name()
        self._expect("=")
        if self._accept("intersect"):
            self._expect("(")
            first = self._ref(LINE, CIRCLE)
            self._expect(",")
            second = self._ref(LINE, CIRCLE)
            self._expect(")")
            index = self._index()
            where = self._where()
            name = self._declare(name_tok, POINT)
            return IntersectDecl(name, first, second, index, where, span=self._span(start))

        if not self._tok.is_("("):
            self._fail("'('", "'intersect'")
        self._advance()
        x = self._expr()
        self._expect(",")
        y = self._expr()
        self._expect(")")
        return PointDecl(self._declare(name_tok, POINT), x, y, span=self._span(start))

    def _index(self) -> int | None:
        if not self._accept("["):
            return None
        tok = self._tok
        if tok.kind is not TokenKind.INT or tok.text not in ("0", "1"):
            self._fail("'0'", "'1'")
        self._advance()
        self._expect("]")
        return int(tok.text)

    def _where(self) -> SignFilter | None:
        if not self._accept("where"):
            return None
        axis = self._tok
        if not (axis.is_("x") or axis.is_("y")):
            self._fail("'x'", "'y'")
        self._advance()
        op = self._tok
        if not (op.is_(">") or op.is_("<")):
            self._fail("'>'", "'<'")
        self._advance()
        zero = self._tok
        if zero.kind is not TokenKind.INT or int(zero.text) != 0:
            self._fail("'0'")
        self._advance()
        return SignFilter(axis=axis.text, op=op.text)  # type: ignore[arg-type]

    def _line(self) -> StatementAst:
        start = self._advance()
        name_tok = self._expect_name()
        self._expect("=")
        p = self._ref(POINT)
        q = self._ref(POINT)
        return LineDecl(self._declare(name_tok, LINE), p, q, span=self._span(start))

    def _circle(self) -> StatementAst:
        start = self._advance()
        name_tok = self._expect_name()
        self._expect("=")
        self._expect("center")
        center = self._ref(POINT)
        if self._accept("through"):
            through = self._ref(POINT)
            return CircleThroughDecl(self._declare(name_tok, CIRCLE), center, through, span=self._span(start))
        if not self._accept("radius"):
            self._fail("'through'", "'radius'")
        self._expect("dist")
        self._expect("(")
        p = self._ref(POINT)
        self._expect(",")
        q = self._ref(POINT)
        self._expect(")")
        return CircleRadiusDecl(self._declare(name_tok, CIRCLE), center, p, q, span=self._span(start))

    def _let(self) -> StatementAst:
        start = self._advance()
        name_tok = self._expect_name()
        self._expect("=")
        expr = self._expr()
        return LetDecl(self._declare(name_tok, SCALAR), expr, span=self._span(start))

    def _measure(self) -> StatementAst:
        start = self._advance()
        if self._accept("angle"):
            name_tok = self._expect_name()
            self._expect("=")
            self._expect("angle")
            points = self._point_args(3)
            kind = MeasureKind.ANGLE
        elif self._accept("length"):
            name_tok = self._expect_name()
            self._expect("=")
            self._expect("dist")
            points = self._point_args(2)
            kind = MeasureKind.LENGTH
        else:
            self._fail("'angle'", "'length'")
        target = self._target(kind) if self._accept("target") else None
        name = self._declare(name_tok, MEASUREMENT)
        return MeasureDecl(kind.value, name, points, target, span=self._span(start))  # type: ignore[arg-type]

    def _assert_zero(self) -> StatementAst:
        start = self._advance()
        self._expect("(")
        expr = self._expr()
        self._expect(")")
        return AssertZeroDecl(expr, span=self._span(start))

    def _mark(self) -> StatementAst:
        start = self._advance()
        name_tok = self._expect_name()
        self._expect("=")
        self._expect("arc")
        self._expect("(")
        center = self._ref(POINT)
        self._expect(",")
        begin = self._ref(POINT)
        self._expect(",")
        target = self._target(MeasureKind.ANGLE)
        self._expect(")")
        return MarkArcDecl(self._declare(name_tok, MARK), center, begin, target, span=self._span(start))

    def _point_args(self, count: int) -> tuple[str, ...]:
        self._expect("(")
        names = [self._ref(POINT)]
        for _ in range(count - 1):
            self._expect(",")
            names.append(self._ref(POINT))
        self._expect(")")
        return tuple(names)

    # Expressions: sum > product > unary minus > power > atom

    def _expr(self) -> ExprAst:
        left = self._term()
        while self._tok.is_("+") or self._tok.is_("-"):
            op = self._advance()
            right = self._term()
            left = BinaryAst(op.text, left, right, span=self._span(op))  # type: ignore[arg-type]
        return left

    def _term(self) -> ExprAst:
        left = self._unary()
        while self._tok.is_("*") or self._tok.is_("/"):
            op = self._advance()
            right = self._unary()
            left = BinaryAst(op.text, left, right, span=self._span(op))  # type: ignore[arg-type]
        return left

    def _unary(self) -> ExprAst:
        if self._tok.is_("-"):
            op = self._advance()
            return NegAst(self._unary(), span=self._span(op))
        return self._power()

    def _power(self) -> ExprAst:
        base = self._atom()
        if self._tok.is_("^"):
            op = self._advance()
            if self._tok.kind is not TokenKind.INT:
                self._fail("integer exponent")
            exponent = int(self._advance().text)
            return PowAst(base, exponent, span=self._span(op))
        return base

    def _atom(self) -> ExprAst:
        tok = self._tok
        span = self._span(tok)
        if tok.kind is TokenKind.INT:
            self._advance()
            return IntAst(int(tok.text), span=span)
        if tok.kind is TokenKind.NAME:
            return NameAst(self._ref(SCALAR), span=span)
        if tok.is_("phi"):
            self._advance()
            return PhiAst(span=span)
        if tok.is_("("):
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        if tok.is_("sqrt"):
            self._advance()
            self._expect("(")
            inner = self._expr()
            self._expect(")")
            return SqrtAst(inner, span=span)
        if tok.is_("dist") or tok.is_("dist2"):
            self._advance()
            return PointFuncAst(tok.text, self._point_args(2), span=span)  # type: ignore[arg-type]
        if tok.is_("x") or tok.is_("y"):
            self._advance()
            return PointFuncAst(tok.text, self._point_args(1), span=span)  # type: ignore[arg-type]
        self._fail("expression")
