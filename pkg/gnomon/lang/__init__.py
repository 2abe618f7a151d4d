from gnomon.lang.ast import ConstructionProgram, SourceSpan
from gnomon.lang.diagnostics import format_diagnostics
from gnomon.lang.errors import (
    AssertionFailed,
    DuplicateIdentifier,
    EuclidSyntaxError,
    EvaluationError,
    KindMismatch,
    LangError,
    NoSuchIntersection,
    UnknownTarget,
    UseBeforeDeclaration,
)
from gnomon.lang.interpreter import ArcMark, AssertionOutcome, InterpretedModel, interpret
from gnomon.lang.parser import DefaultScriptParser, ScriptParser, parse, parse_file
from gnomon.lang.printer import format_expr, pretty_print

__all__ = [
    "ConstructionProgram",
    "SourceSpan",
    "InterpretedModel",
    "AssertionOutcome",
    "ArcMark",
    # Operations
    "ScriptParser",
    "DefaultScriptParser",
    "parse",
    "parse_file",
    "interpret",
    "pretty_print",
    "format_expr",
    "format_diagnostics",
    # Errors
    "LangError",
    "EuclidSyntaxError",
    "DuplicateIdentifier",
    "UseBeforeDeclaration",
    "KindMismatch",
    "UnknownTarget",
    "EvaluationError",
    "NoSuchIntersection",
    "AssertionFailed",
]
