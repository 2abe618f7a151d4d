from collections.abc import Mapping
from typing import Any


class LangError(Exception):
    """
    Base class for construction-script errors.

    Carries an optional source location; ``str()`` renders the
    ``file:line:col: message`` form used by diagnostics.
    """

    code: str
    message: str
    file: str | None = None
    line: int | None = None
    column: int | None = None
    details: Mapping[str, Any] | None = None

    def __init__(
        self,
        message: str,
        code: str = "lang_error",
        file: str | None = None,
        line: int | None = None,
        column: int | None = None,
        details: Mapping[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.file = file
        self.line = line
        self.column = column
        self.details = details

    def __str__(self) -> str:
        loc = ""
        if self.file:
            loc = self.file
            if self.line is not None:
                loc += f":{self.line}"
                if self.column is not None:
                    loc += f":{self.column}"
            loc += ": "
        return f"{loc}{self.message}"

    def sort_key(self) -> tuple[str, int, int]:
        return (self.file or "", self.line or 0, self.column or 0)


class EuclidSyntaxError(LangError):
    """Unexpected token; ``expected`` lists what would have been accepted (literal tokens quoted)."""

    def __init__(self, expected: tuple[str, ...], **kwargs: Any) -> None:
        alternatives = " or ".join(expected)
        super().__init__(f"expected {alternatives}", code="syntax_error", **kwargs)
        self.expected = expected


class DuplicateIdentifier(LangError):
    def __init__(self, name: str, **kwargs: Any) -> None:
        super().__init__(f"identifier '{name}' is already declared", code="duplicate_identifier", **kwargs)
        self.name = name


class UseBeforeDeclaration(LangError):
    def __init__(self, name: str, **kwargs: Any) -> None:
        super().__init__(f"identifier '{name}' is used before it is declared", code="use_before_declaration", **kwargs)
        self.name = name


class KindMismatch(LangError):
    def __init__(self, name: str, expected: str, actual: str, **kwargs: Any) -> None:
        super().__init__(f"'{name}' is a {actual}, expected a {expected}", code="kind_mismatch", **kwargs)
        self.name = name


class UnknownTarget(LangError):
    def __init__(self, name: str, **kwargs: Any) -> None:
        super().__init__(f"unknown target '{name}'", code="unknown_target", **kwargs)
        self.name = name


class EvaluationError(LangError):
    """A tower, geometry or measurement failure raised while executing a statement."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        super().__init__(message, code="evaluation_error", **kwargs)


class NoSuchIntersection(LangError):
    def __init__(self, message: str, **kwargs: Any) -> None:
        super().__init__(message, code="no_such_intersection", **kwargs)


class AssertionFailed(LangError):
    def __init__(self, sign: int, **kwargs: Any) -> None:
        super().__init__(f"assertion failed: sign of difference = {sign:+d}", code="assertion_failed", **kwargs)
        self.sign = sign
