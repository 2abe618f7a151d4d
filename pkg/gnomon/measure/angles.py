import logging
from collections.abc import Callable
from fractions import Fraction

from gnomon.core.config import PrecisionSettings
from gnomon.geometry import Point
from gnomon.measure.certify import measure
from gnomon.measure.errors import DegenerateRay
from gnomon.measure.trig import to_degrees
from gnomon.measure.types import Evaluator, Measurement, MeasureKind
from gnomon.oracle.factor import KNOWN_FERMAT_PRIMES
from gnomon.tower import FieldElement, Interval
from gnomon.tower import interval as iv

logger = logging.getLogger(__name__)

UNITS = ("deg", "rad")


def angle_evaluator(p: Point, center: Point, q: Point, unit: str = "deg") -> Evaluator:
    """
    Evaluator for the unsigned angle ∠(p, center, q) in [0, π].

    The quadrant is decided exactly from the signs of the dot and cross
    products; only the arctangent of |cross|/|dot| is numeric.
    """
    if unit not in UNITS:
        raise ValueError(f"unknown angle unit {unit!r}; expected one of {UNITS}")

    ux, uy = p - center
    vx, vy = q - center
    if ux.is_zero() and uy.is_zero():
        raise DegenerateRay(f"ray from {center} to {p} has zero length")
    if vx.is_zero() and vy.is_zero():
        raise DegenerateRay(f"ray from {center} to {q} has zero length")

    dot = ux * vx + uy * vy
    cross = ux * vy - uy * vx
    dot_sign, cross_sign = dot.sign(), cross.sign()
    abs_dot = _abs(dot, dot_sign)
    abs_cross = _abs(cross, cross_sign)

    def radians(bits: int) -> Interval:
        if cross_sign == 0:
            return Interval.point(0, bits) if dot_sign > 0 else iv.pi(bits)
        if dot_sign == 0:
            return iv.pi(bits) / 2
        base = iv.atan(abs_cross.approx(bits) / abs_dot.approx(bits))
        return base if dot_sign > 0 else iv.pi(bits) - base

    if unit == "rad":
        return radians
    return lambda bits: to_degrees(radians(bits))


def angle_equals(p: Point, center: Point, q: Point) -> Callable[[Fraction], bool]:
    """
    Exact test of whether ∠(p, center, q) is ``t`` degrees, for rational ``t``.

    With z = dot + i·|cross| and t° = 360°·a/n (reduced), z^n is a positive real
    exactly when the angle is a multiple of 360°/n; an enclosure closer to t
    than half that spacing singles out t itself.
    """
    ux, uy = p - center
    vx, vy = q - center
    dot = ux * vx + uy * vy
    cross = ux * vy - uy * vx
    cross = _abs(cross, cross.sign())
    degrees = angle_evaluator(p, center, q, "deg")

    def equals(t: Fraction) -> bool:
        turn = t / 360
        if turn < 0 or turn > Fraction(1, 2):
            return False
        if turn == 0:
            return cross.is_zero() and dot.sign() > 0
        n = turn.denominator
        if not _constructible_denominator(n):
            return False
        bits = 64 + 2 * n.bit_length()
        while True:
            try:
                lo, hi = degrees(bits).to_fractions()
                break
            except ZeroDivisionError:
                bits *= 2
        half_step = Fraction(180, n)
        if not (t - half_step < lo and hi < t + half_step):
            return False
        re, im = _complex_power(dot, cross, n)
        return im.is_zero() and re.sign() > 0

    return equals


def central_angle(
    p: Point,
    center: Point,
    q: Point,
    digits: int,
    *,
    name: str = "angle",
    unit: str = "deg",
    precision: PrecisionSettings | None = None,
) -> Measurement:
    evaluate = angle_evaluator(p, center, q, unit)
    # a nonzero rational number of radians is never the angle between constructible rays
    equals = angle_equals(p, center, q) if unit == "deg" else None
    result = measure(name, MeasureKind.ANGLE, evaluate, digits, unit=unit, precision=precision, equals=equals)
    logger.debug("measured %s = %s %s", name, result.decimal, unit)
    return result


def length(
    p: Point,
    q: Point,
    digits: int,
    *,
    name: str = "length",
    precision: PrecisionSettings | None = None,
) -> Measurement:
    """Certified Euclidean distance |pq|, without growing the tower."""
    dx, dy = p - q
    d2 = dx * dx + dy * dy
    return measure(
        name,
        MeasureKind.LENGTH,
        lambda bits: d2.approx(bits).sqrt(),
        digits,
        precision=precision,
        equals=lambda t: t >= 0 and d2 == t * t,
    )


def _abs(x: FieldElement, sign: int) -> FieldElement:
    return -x if sign < 0 else x


def _constructible_denominator(n: int) -> bool:
    while n % 2 == 0:
        n //= 2
    for p in KNOWN_FERMAT_PRIMES:
        if n % p == 0:
            n //= p
    return n == 1


def _complex_power(re: FieldElement, im: FieldElement, n: int) -> tuple[FieldElement, FieldElement]:
    """(re + i·im)^n by repeated squaring."""
    acc_re, acc_im = re.tower.one(), re.tower.zero()
    while n:
        if n & 1:
            acc_re, acc_im = acc_re * re - acc_im * im, acc_re * im + acc_im * re
        re, im = re * re - im * im, 2 * re * im
        n >>= 1
    return acc_re, acc_im
