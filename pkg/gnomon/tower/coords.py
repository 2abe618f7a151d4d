"""
Coordinate-vector arithmetic in a quadratic tower.

An element at level ``k`` is a tuple of ``2**k`` Fractions. Bit ``i`` of a
coordinate index selects the factor ``sqrt(r_i)``, so the upper half of a
level-``k`` vector is the coefficient of ``sqrt(r_{k-1})``:

    x = a + b*sqrt(r)      with a = coords[:half], b = coords[half:]

``radicands[i]`` is the coordinate vector of ``r_i`` at level ``i``.
"""

from collections.abc import Sequence
from fractions import Fraction

from gnomon.tower.errors import DivisionByZero

Coords = tuple[Fraction, ...]
Radicands = Sequence[Coords]

_ZERO = Fraction(0)


def level_of(c: Coords) -> int:
    return len(c).bit_length() - 1


def zeros(level: int) -> Coords:
    return (_ZERO,) * (1 << level)


def constant(q: Fraction | int, level: int = 0) -> Coords:
    return lift((Fraction(q),), level)


def lift(c: Coords, level: int) -> Coords:
    have = len(c)
    want = 1 << level
    if have > want:
        raise ValueError(f"cannot lift a level-{level_of(c)} vector down to level {level}")
    if have == want:
        return c
    return c + (_ZERO,) * (want - have)


def reduce(c: Coords) -> Coords:
    """Drop upper halves that are entirely zero (smallest level holding the value)."""
    while len(c) > 1:
        half = len(c) >> 1
        if any(c[half:]):
            break
        c = c[:half]
    return c


def is_zero(c: Coords) -> bool:
    return not any(c)


def split(c: Coords) -> tuple[Coords, Coords]:
    half = len(c) >> 1
    return c[:half], c[half:]


def add(x: Coords, y: Coords) -> Coords:
    n = max(len(x), len(y))
    x, y = lift(x, level_of_len(n)), lift(y, level_of_len(n))
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Coords, y: Coords) -> Coords:
    n = max(len(x), len(y))
    x, y = lift(x, level_of_len(n)), lift(y, level_of_len(n))
    return tuple(a - b for a, b in zip(x, y, strict=True))


def neg(x: Coords) -> Coords:
    return tuple(-a for a in x)


def scale(x: Coords, q: Fraction) -> Coords:
    return tuple(a * q for a in x)


def mul(x: Coords, y: Coords, radicands: Radicands) -> Coords:
    n = max(len(x), len(y))
    level = level_of_len(n)
    return _mul(lift(x, level), lift(y, level), level, radicands)


def _mul(x: Coords, y: Coords, level: int, radicands: Radicands) -> Coords:
    if level == 0:
        return (x[0] * y[0],)
    if is_zero(x) or is_zero(y):
        return zeros(level)

    a, b = split(x)
    c, d = split(y)
    below = level - 1
    b_zero, d_zero = is_zero(b), is_zero(d)

    if b_zero and d_zero:
        return _mul(a, c, below, radicands) + zeros(below)
    if b_zero:
        return _mul(a, c, below, radicands) + _mul(a, d, below, radicands)
    if d_zero:
        return _mul(a, c, below, radicands) + _mul(b, c, below, radicands)

    # (a + b√r)(c + d√r) = (ac + r·bd) + (ad + bc)√r
    bd = _mul(b, d, below, radicands)
    rational_part = add(_mul(a, c, below, radicands), _mul(radicands[below], bd, below, radicands))
    radical_part = add(_mul(a, d, below, radicands), _mul(b, c, below, radicands))
    return rational_part + radical_part


def norm_down(x: Coords, radicands: Radicands) -> Coords:
    """``a² − r·b²``: the relative norm of ``a + b√r`` one level down."""
    a, b = split(x)
    below = level_of(x) - 1
    return sub(_mul(a, a, below, radicands), _mul(radicands[below], _mul(b, b, below, radicands), below, radicands))


def inv(x: Coords, radicands: Radicands) -> Coords:
    if is_zero(x):
        raise DivisionByZero("division by zero (exact)")
    return _inv(x, level_of(x), radicands)


def _inv(x: Coords, level: int, radicands: Radicands) -> Coords:
    if level == 0:
        return (1 / x[0],)
    a, b = split(x)
    below = level - 1
    if is_zero(b):
        return _inv(a, below, radicands) + zeros(below)
    # 1/(a + b√r) = (a − b√r) / (a² − r·b²); the norm is nonzero in a faithful tower
    n_inv = _inv(norm_down(x, radicands), below, radicands)
    return _mul(a, n_inv, below, radicands) + neg(_mul(b, n_inv, below, radicands))


def level_of_len(n: int) -> int:
    return n.bit_length() - 1
