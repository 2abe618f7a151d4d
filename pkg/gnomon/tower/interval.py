"""
Closed real intervals with multiprecision endpoints.

Rational arithmetic rounds each endpoint outward with mpmath's directed
rounding (``rounding="f"`` / ``"c"``). Square roots and transcendental
functions are evaluated ``GUARD_BITS`` above the working precision and then
widened by ``2^-prec * (|v| + 1)``, which dominates mpmath's few-ulp error at
the guarded precision.
"""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

GUARD_BITS = 32


def exact_mpf(n: int) -> mpf:
    """Convert an integer of any size to an mpf without rounding."""
    with mpmath.workprec(max(n.bit_length(), 1) + 2):
        return mpf(n)


def mpf_to_fraction(v: mpf) -> Fraction:
    if not mpmath.isfinite(v):
        raise ValueError(f"Cannot convert non-finite value {v} to a fraction")
    man, exp = v.man_exp
    if exp >= 0:
        return Fraction(int(man) << exp)
    return Fraction(int(man), 1 << -exp)


@dataclass(frozen=True, slots=True)
class Interval:
    lo: mpf
    hi: mpf
    prec: int

    # Construction

    @staticmethod
    def point(value: int | Fraction, prec: int) -> "Interval":
        return Interval.from_fraction(Fraction(value), prec)

    @staticmethod
    def from_fraction(q: Fraction, prec: int) -> "Interval":
        num, den = exact_mpf(q.numerator), exact_mpf(q.denominator)
        return Interval(
            mpmath.fdiv(num, den, prec=prec, rounding="f"),
            mpmath.fdiv(num, den, prec=prec, rounding="c"),
            prec,
        )

    @staticmethod
    def enclose(value: mpf, prec: int) -> "Interval":
        """Enclose a value computed at ``prec + GUARD_BITS`` bits."""
        slack = mpmath.ldexp(abs(value) + 1, -prec)
        return Interval(
            mpmath.fsub(value, slack, prec=prec, rounding="f"),
            mpmath.fadd(value, slack, prec=prec, rounding="c"),
            prec,
        )

    @staticmethod
    def hull(a: "Interval", b: "Interval") -> "Interval":
        return Interval(min(a.lo, b.lo), max(a.hi, b.hi), min(a.prec, b.prec))

    # Queries

    @property
    def width(self) -> mpf:
        return mpmath.fsub(self.hi, self.lo, prec=self.prec, rounding="c")

    @property
    def mid(self) -> mpf:
        return mpmath.ldexp(mpmath.fadd(self.lo, self.hi, prec=self.prec + 1), -1)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, value: Fraction | int) -> bool:
        q = Fraction(value)
        return mpf_to_fraction(self.lo) <= q <= mpf_to_fraction(self.hi)

    def sign(self) -> int | None:
        """Certified sign, or None while the interval still straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 and self.hi == 0:
            return 0
        return None

    def to_fractions(self) -> tuple[Fraction, Fraction]:
        return mpf_to_fraction(self.lo), mpf_to_fraction(self.hi)

    # Arithmetic

    def _coerce(self, other: "Interval | int | Fraction") -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.from_fraction(Fraction(other), self.prec)

    def __add__(self, other: "Interval | int | Fraction") -> "Interval":
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        return Interval(
            mpmath.fadd(self.lo, o.lo, prec=p, rounding="f"),
            mpmath.fadd(self.hi, o.hi, prec=p, rounding="c"),
            p,
        )

    __radd__ = __add__

    def __sub__(self, other: "Interval | int | Fraction") -> "Interval":
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        return Interval(
            mpmath.fsub(self.lo, o.hi, prec=p, rounding="f"),
            mpmath.fsub(self.hi, o.lo, prec=p, rounding="c"),
            p,
        )

    def __rsub__(self, other: int | Fraction) -> "Interval":
        return self._coerce(other) - self

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.prec)

    def __abs__(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(mpf(0), max(-self.lo, self.hi), self.prec)

    def __mul__(self, other: "Interval | int | Fraction") -> "Interval":
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        return Interval(
            min(mpmath.fmul(x, y, prec=p, rounding="f") for x, y in pairs),
            max(mpmath.fmul(x, y, prec=p, rounding="c") for x, y in pairs),
            p,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | int | Fraction") -> "Interval":
        o = self._coerce(other)
        if o.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        p = min(self.prec, o.prec)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        return Interval(
            min(mpmath.fdiv(x, y, prec=p, rounding="f") for x, y in pairs),
            max(mpmath.fdiv(x, y, prec=p, rounding="c") for x, y in pairs),
            p,
        )

    def __rtruediv__(self, other: int | Fraction) -> "Interval":
        return self._coerce(other) / self

    def sqrt(self) -> "Interval":
        """Square root; a slightly negative lower end (rounding noise) is clamped to zero."""
        if self.hi < 0:
            raise ValueError("square root of a negative interval")
        lo = max(self.lo, mpf(0))
        return monotone(mpmath.sqrt, Interval(lo, self.hi, self.prec), floor=mpf(0))

    def __repr__(self) -> str:
        digits = max(int(self.prec * 0.30103), 1)
        return f"Interval([{mpmath.nstr(self.lo, digits)}, {mpmath.nstr(self.hi, digits)}], prec={self.prec})"


def monotone(
    fn: Callable[[mpf], mpf],
    x: Interval,
    *,
    increasing: bool = True,
    floor: mpf | None = None,
    ceiling: mpf | None = None,
) -> Interval:
    """Lift a monotone real function to intervals by evaluating it at the endpoints."""
    with mpmath.workprec(x.prec + GUARD_BITS):
        at_lo, at_hi = fn(x.lo), fn(x.hi)
    a, b = Interval.enclose(at_lo, x.prec), Interval.enclose(at_hi, x.prec)
    lo, hi = (a.lo, b.hi) if increasing else (b.lo, a.hi)
    if floor is not None:
        lo = max(lo, floor)
    if ceiling is not None:
        hi = min(hi, ceiling)
    return Interval(lo, hi, x.prec)


def pi(prec: int) -> Interval:
    with mpmath.workprec(prec + GUARD_BITS):
        value = +mpmath.pi
    return Interval.enclose(value, prec)


def sin(x: Interval) -> Interval:
    """Interval sine, widened to the attained extremes when a peak may lie inside ``x``."""
    one = mpf(1)
    if x.width > 6:
        return Interval(-one, one, x.prec)

    with mpmath.workprec(x.prec + GUARD_BITS):
        at_lo, at_hi = mpmath.sin(x.lo), mpmath.sin(x.hi)
    out = Interval.hull(Interval.enclose(at_lo, x.prec), Interval.enclose(at_hi, x.prec))
    lo, hi = out.lo, out.hi

    if _may_contain_phase(x, Fraction(1, 4)):
        hi = one
    if _may_contain_phase(x, Fraction(3, 4)):
        lo = -one
    return Interval(max(lo, -one), min(hi, one), x.prec)


def cos(x: Interval) -> Interval:
    return sin(x + pi(x.prec) / 2)


def asin(x: Interval) -> Interval:
    one = mpf(1)
    if x.lo > 1 or x.hi < -1:
        raise ValueError("arcsine argument outside [-1, 1]")
    clamped = Interval(max(x.lo, -one), min(x.hi, one), x.prec)
    return monotone(mpmath.asin, clamped)


def atan(x: Interval) -> Interval:
    return monotone(mpmath.atan, x)


def _may_contain_phase(x: Interval, turn_fraction: Fraction) -> bool:
    """
    Whether ``x`` may contain a point ``2*pi*(k + turn_fraction)``.

    Conservative: a near miss within the precision slack counts as a hit.
    """
    with mpmath.workprec(x.prec + GUARD_BITS):
        two_pi = 2 * mpmath.pi
        phase = two_pi * mpf(turn_fraction.numerator) / turn_fraction.denominator
        k = int(mpmath.floor((x.lo - phase) / two_pi))
        slack = mpmath.ldexp(abs(x.lo) + abs(x.hi) + 8, -x.prec)
        for j in (k, k + 1, k + 2):
            c = phase + two_pi * j
            if x.lo - slack <= c <= x.hi + slack:
                return True
    return False
