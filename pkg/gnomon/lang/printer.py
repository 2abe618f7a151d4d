"""Canonical text form of a ConstructionProgram: one statement per line, minimal parentheses."""

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
    SqrtAst,
    StatementAst,
)

_SUM, _PRODUCT, _UNARY, _POWER, _ATOM = 1, 2, 3, 4, 5

_BINARY_PREC = {"+": _SUM, "-": _SUM, "*": _PRODUCT, "/": _PRODUCT}


def pretty_print(program: ConstructionProgram) -> str:
    lines = [format_statement(s) for s in program.statements]
    return "".join(f"{ln}\n" for ln in lines)


def format_statement(s: StatementAst) -> str:
    match s:
        case PointDecl(name=name, x=x, y=y):
            return f"point {name} = ({format_expr(x)}, {format_expr(y)})"
        case IntersectDecl(name=name, first=first, second=second, index=index, where=where):
            text = f"point {name} = intersect({first}, {second})"
            if index is not None:
                text += f"[{index}]"
            if where is not None:
                text += f" where {where.axis} {where.op} 0"
            return text
        case LineDecl(name=name, p=p, q=q):
            return f"line {name} = {p} {q}"
        case CircleThroughDecl(name=name, center=center, through=through):
            return f"circle {name} = center {center} through {through}"
        case CircleRadiusDecl(name=name, center=center, p=p, q=q):
            return f"circle {name} = center {center} radius dist({p}, {q})"
        case LetDecl(name=name, expr=expr):
            return f"let {name} = {format_expr(expr)}"
        case MeasureDecl(kind=kind, name=name, points=points, target=target):
            call = "angle" if kind == "angle" else "dist"
            text = f"measure {kind} {name} = {call}({', '.join(points)})"
            return text if target is None else f"{text} target {target}"
        case AssertZeroDecl(expr=expr):
            return f"assert_zero({format_expr(expr)})"
        case MarkArcDecl(name=name, center=center, start=start, target=target):
            return f"mark {name} = arc({center}, {start}, {target})"
    raise TypeError(f"unknown statement node: {type(s).__name__}")


def format_expr(e: ExprAst) -> str:
    text, _ = _format(e)
    return text


def _format(e: ExprAst) -> tuple[str, int]:
    match e:
        case IntAst(value=value):
            return str(value), _ATOM
        case PhiAst():
            return "phi", _ATOM
        case NameAst(name=name):
            return name, _ATOM
        case SqrtAst(operand=operand):
            return f"sqrt({format_expr(operand)})", _ATOM
        case PointFuncAst(func=func, points=points):
            return f"{func}({', '.join(points)})", _ATOM
        case PowAst(base=base, exponent=exponent):
            return f"{_wrap(base, _ATOM)}^{exponent}", _POWER
        case NegAst(operand=operand):
            return f"-{_wrap(operand, _UNARY)}", _UNARY
        case BinaryAst(op=op, left=left, right=right):
            prec = _BINARY_PREC[op]
            # left-associative: an equal-precedence right operand needs parentheses
            return f"{_wrap(left, prec)} {op} {_wrap(right, prec + 1)}", prec
    raise TypeError(f"unknown expression node: {type(e).__name__}")


def _wrap(e: ExprAst, min_prec: int) -> str:
    text, prec = _format(e)
    return text if prec >= min_prec else f"({text})"
