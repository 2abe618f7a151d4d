"""
Square detection inside a quadratic tower.

For ``x = a + b√r`` one level up, a root ``u + v√r`` must satisfy
``u² + r·v² = a`` and ``2uv = b``. Then ``(u² − r·v²)² = a² − r·b²``, so with
``s = sqrt(a² − r·b²)`` (found recursively one level down) the candidates are
``u² = (a ± s)/2`` and ``v = b/(2u)``. When ``b = 0`` the root is either ``u = √a``
or ``v = √(a/r)``. The search never adjoins; ``None`` means "not a square here".
"""

from fractions import Fraction
from math import isqrt

from gnomon.tower import coords as C
from gnomon.tower.coords import Coords, Radicands

_HALF = Fraction(1, 2)


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def find_root(x: Coords, radicands: Radicands) -> Coords | None:
    """
    Return some ``y`` with ``y*y == x`` inside the full tower, or None.

    ``x`` is lifted to the top of the tower first: a rational such as 6 can be
    a square only after both √2 and √3 have been adjoined.
    """
    level = len(radicands)
    return _find_root(C.lift(x, level), level, radicands)


def _find_root(x: Coords, level: int, radicands: Radicands) -> Coords | None:
    if level == 0:
        q = rational_sqrt(x[0])
        return None if q is None else (q,)
    if C.is_zero(x):
        return C.zeros(level)

    a, b = C.split(x)
    below = level - 1
    r = radicands[below]

    if C.is_zero(b):
        u = _find_root(a, below, radicands)
        if u is not None:
            return u + C.zeros(below)
        v = _find_root(C.mul(a, C.inv(r, radicands), radicands), below, radicands)
        if v is not None:
            return C.zeros(below) + v
        return None

    s = _find_root(C.norm_down(x, radicands), below, radicands)
    if s is None:
        return None

    for t in (C.scale(C.add(a, s), _HALF), C.scale(C.sub(a, s), _HALF)):
        if C.is_zero(t):
            continue
        u = _find_root(t, below, radicands)
        if u is None:
            continue
        v = C.mul(b, C.inv(C.scale(u, Fraction(2)), radicands), radicands)
        return u + C.lift(v, below)
    return None
