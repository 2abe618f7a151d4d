"""
Correctly rounded decimals from interval evaluators.

An evaluator maps a working precision (bits) to an enclosure of the value.
Certification doubles the precision until the enclosure is narrow enough and
both of its ends round half-up to the same decimal string.

A value lying exactly on a rounding midpoint straddles it at every precision.
Callers that can compare their value exactly with a rational pass ``equals``;
once the enclosure is narrow enough to hold a single midpoint, that midpoint is
tested and, on equality, rounded directly.
"""

import logging
import math
from collections.abc import Callable
from fractions import Fraction
from typing import Literal

from gnomon.core.config import PrecisionSettings
from gnomon.measure.types import Evaluator, Measurement, MeasureKind
from gnomon.tower import Interval, PrecisionExhausted

logger = logging.getLogger(__name__)

RoundingMode = Literal["fixed", "significant"]

# bits per decimal digit, rounded up
_BITS_PER_DIGIT = Fraction(3322, 1000)


def round_half_up(q: Fraction, places: int) -> str:
    """Decimal string of ``q`` rounded half away from zero to ``places`` fractional digits."""
    negative = q < 0
    scaled = abs(q) * 10**places
    n = int(scaled)
    if scaled - n >= Fraction(1, 2):
        n += 1
    text = str(n).rjust(places + 1, "0")
    if places > 0:
        text = f"{text[:-places]}.{text[-places:]}"
    if negative and n != 0:
        text = "-" + text
    return text


def decimal_exponent(q: Fraction) -> int:
    """The ``e`` with ``10**e <= |q| < 10**(e + 1)``; ``q`` must be nonzero."""
    q = abs(q)
    e = len(str(q.numerator)) - len(str(q.denominator))
    while q < Fraction(10) ** e:
        e -= 1
    while q >= Fraction(10) ** (e + 1):
        e += 1
    return e


def render_fixed(value: Interval, places: int) -> str | None:
    """The common rounding of both ends, or None while they still disagree."""
    lo, hi = value.to_fractions()
    if hi - lo >= Fraction(1, 10 ** (places + 2)):
        return None
    a, b = round_half_up(lo, places), round_half_up(hi, places)
    return a if a == b else None


def round_significant(q: Fraction, digits: int) -> str:
    """``q`` (nonzero) rounded half-up to ``digits`` significant digits."""
    e = decimal_exponent(q)
    places = digits - 1 - e
    text = round_half_up(q, max(places, 0))
    if abs(Fraction(text)) >= Fraction(10) ** (e + 1):
        # rounding carried into the next decade
        text = round_half_up(q, max(places - 1, 0))
    return text


def render_significant(value: Interval, digits: int) -> str | None:
    lo, hi = value.to_fractions()
    if lo == hi == 0:
        return round_half_up(Fraction(0), digits - 1)
    if lo <= 0 <= hi:
        return None
    magnitude = min(abs(lo), abs(hi))
    if hi - lo >= magnitude / 10 ** (digits + 2):
        return None
    a, b = round_significant(lo, digits), round_significant(hi, digits)
    return a if a == b else None


def rounding_midpoint(value: Interval, places: int) -> Fraction | None:
    """The midpoint ``(2m + 1) / (2·10^places)`` inside ``value``, if there is exactly one."""
    lo, hi = value.to_fractions()
    scale = 10**places
    m = math.ceil(lo * scale - Fraction(1, 2))
    t = Fraction(2 * m + 1, 2 * scale)
    if t > hi or t + Fraction(1, scale) <= hi:
        return None
    return t


def certify(
    evaluate: Evaluator,
    digits: int,
    *,
    mode: RoundingMode = "fixed",
    precision: PrecisionSettings | None = None,
    equals: Callable[[Fraction], bool] | None = None,
) -> tuple[Interval, str]:
    """
    Refine ``evaluate`` until its enclosure renders unambiguously.

    ``equals(t)`` decides exactly whether the enclosed value is the rational
    ``t``; it is only consulted in fixed mode. Returns the final enclosure and
    its decimal. Raises ``PrecisionExhausted`` when ``max_bits`` is passed.
    """
    if digits < 0 or (mode == "significant" and digits < 1):
        raise ValueError(f"invalid digit count {digits} for {mode} rounding")
    settings = precision or PrecisionSettings()
    bits = max(settings.start_bits, int(digits * _BITS_PER_DIGIT) + 32)
    checked: set[Fraction] = set()

    while bits <= settings.max_bits:
        try:
            value = evaluate(bits)
        except ZeroDivisionError:
            # an intermediate divisor still straddles zero at this precision
            logger.debug("division undecided at %d bits, doubling", bits)
            bits *= 2
            continue
        text = render_fixed(value, digits) if mode == "fixed" else render_significant(value, digits)
        if text is not None:
            return value, text
        if equals is not None and mode == "fixed":
            tie = _settle_tie(value, digits, equals, checked)
            if tie is not None:
                return Interval.from_fraction(tie, bits), round_half_up(tie, digits)
        logger.debug("decimal not yet certified at %d bits, doubling", bits)
        bits *= 2

    raise PrecisionExhausted(
        f"could not certify {digits} digits within {settings.max_bits} bits",
        details={"max_bits": settings.max_bits, "digits": digits},
    )


def measure(
    name: str,
    kind: MeasureKind,
    evaluate: Evaluator,
    digits: int,
    *,
    unit: str = "",
    mode: RoundingMode = "fixed",
    precision: PrecisionSettings | None = None,
    equals: Callable[[Fraction], bool] | None = None,
) -> Measurement:
    value, text = certify(evaluate, digits, mode=mode, precision=precision, equals=equals)
    return Measurement(
        name=name,
        kind=kind,
        value=value,
        requested_digits=digits,
        decimal=text,
        unit=unit,
        evaluator=evaluate,
    )


def _settle_tie(
    value: Interval,
    places: int,
    equals: Callable[[Fraction], bool],
    checked: set[Fraction],
) -> Fraction | None:
    lo, hi = value.to_fractions()
    if hi - lo >= Fraction(1, 10 ** (places + 2)):
        return None
    t = rounding_midpoint(value, places)
    if t is None or t in checked:
        return None
    checked.add(t)
    if equals(t):
        logger.debug("value is exactly the rounding midpoint %s", t)
        return t
    return None
