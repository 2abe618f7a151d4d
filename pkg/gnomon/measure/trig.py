"""Chord-based trigonometry on intervals: crd(x) = 2·sin(x/2) and its inverse."""

from mpmath import mpf

from gnomon.measure.errors import DomainError
from gnomon.tower import Interval
from gnomon.tower import interval as iv


def chord(x: Interval) -> Interval:
    """Length of the chord subtending the central angle ``x`` (radians) in a unit circle."""
    return 2 * iv.sin(x / 2)


def arcchord(c: Interval) -> Interval:
    """Central angle in [0, π] whose unit-circle chord is ``c``."""
    if c.hi < 0 or c.lo > 2:
        raise DomainError(f"chord length {c!r} outside [0, 2]")
    angle = 2 * iv.asin(c / 2)
    return Interval(max(angle.lo, mpf(0)), angle.hi, angle.prec)


def to_degrees(rad: Interval) -> Interval:
    return rad * 180 / iv.pi(rad.prec)


def to_radians(deg: Interval) -> Interval:
    return deg * iv.pi(deg.prec) / 180
