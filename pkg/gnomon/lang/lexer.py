import re
from dataclasses import dataclass
from enum import auto

from gnomon.lang.errors import EuclidSyntaxError
from gnomon.utils.enum import StrEnum

KEYWORDS = frozenset(
    {
        "point",
        "line",
        "circle",
        "center",
        "through",
        "radius",
        "intersect",
        "where",
        "let",
        "measure",
        "angle",
        "length",
        "target",
        "assert_zero",
        "mark",
        "arc",
        "phi",
        "sqrt",
        "dist",
        "dist2",
        "x",
        "y",
    }
)

PUNCTUATION = "()[],=+-*/^<>"


class TokenKind(StrEnum):
    KEYWORD = auto()
    NAME = auto()
    INT = auto()
    PUNCT = auto()
    NEWLINE = auto()
    EOF = auto()


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def is_(self, text: str) -> bool:
        """Whether this is the keyword or punctuation ``text``."""
        return self.kind in (TokenKind.KEYWORD, TokenKind.PUNCT) and self.text == text

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        if self.kind is TokenKind.NEWLINE:
            return "end of line"
        return f"'{self.text}'"


_TOKEN_RE = re.compile(
    r"""
    (?P<space>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<int>[0-9]+)
  | (?P<word>[A-Za-z][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],=+\-*/^<>])
    """,
    re.VERBOSE,
)


def tokenize(text: str, *, filename: str | None = None) -> list[Token]:
    """
    Split script text into tokens. Runs of blank lines and comments collapse
    into a single NEWLINE; the stream always ends with NEWLINE, EOF.
    """
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0

    def emit_newline(col: int) -> None:
        if tokens and tokens[-1].kind is not TokenKind.NEWLINE:
            tokens.append(Token(TokenKind.NEWLINE, "\n", line, col))

    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if m is None:
            raise EuclidSyntaxError(
                ("a token",),
                file=filename,
                line=line,
                column=column,
                details={"found": text[pos]},
            )
        kind = m.lastgroup
        value = m.group()
        if kind == "newline":
            emit_newline(column)
            line += 1
            line_start = m.end()
        elif kind == "int":
            tokens.append(Token(TokenKind.INT, value, line, column))
        elif kind == "word":
            tok_kind = TokenKind.KEYWORD if value in KEYWORDS else TokenKind.NAME
            tokens.append(Token(tok_kind, value, line, column))
        elif kind == "punct":
            tokens.append(Token(TokenKind.PUNCT, value, line, column))
        pos = m.end()

    end_column = pos - line_start + 1
    emit_newline(end_column)
    tokens.append(Token(TokenKind.EOF, "", line, end_column))
    return tokens
