"""
Golden-ratio constants and the closed forms of the pentagram construction.

A circle divided in golden ratio splits into the golden angle
β = 2π(1 − 1/φ) ≈ 137.51° and α = 2π/φ ≈ 222.49°, with α + β = 2π.
"""

from collections.abc import Callable
from dataclasses import dataclass

from gnomon.core.config import PrecisionSettings
from gnomon.measure.certify import measure
from gnomon.measure.trig import arcchord, chord, to_degrees
from gnomon.measure.types import Evaluator, Measurement, MeasureKind
from gnomon.tower import FieldElement, Interval
from gnomon.tower import interval as iv


def phi_interval(bits: int) -> Interval:
    return (1 + Interval.point(5, bits).sqrt()) / 2


def golden_angle_rad(bits: int) -> Interval:
    return 2 * iv.pi(bits) * (1 - 1 / phi_interval(bits))


def golden_alpha_rad(bits: int) -> Interval:
    return 2 * iv.pi(bits) / phi_interval(bits)


def golden_angle_deg(bits: int) -> Interval:
    return 360 * (1 - 1 / phi_interval(bits))


def golden_alpha_deg(bits: int) -> Interval:
    return 360 / phi_interval(bits)


def pentagon_side(bits: int) -> Interval:
    """Side of the regular pentagon inscribed in the unit circle: chord(2π/5)."""
    return chord(2 * iv.pi(bits) / 5)


@dataclass(frozen=True, slots=True)
class AngleTargets:
    golden_angle_rad: Evaluator = golden_angle_rad
    golden_alpha_rad: Evaluator = golden_alpha_rad
    golden_angle_deg: Evaluator = golden_angle_deg
    golden_alpha_deg: Evaluator = golden_alpha_deg


ANGLE_TARGETS = AngleTargets()


@dataclass(frozen=True, slots=True)
class NamedTarget:
    """A reference value a DSL measurement may be compared against."""

    name: str
    kind: MeasureKind
    evaluators: dict[str, Evaluator]

    def evaluator(self, unit: str) -> Evaluator:
        try:
            return self.evaluators[unit]
        except KeyError:
            raise ValueError(f"target {self.name!r} has no {unit!r} form") from None


TARGETS: dict[str, NamedTarget] = {
    "golden_angle": NamedTarget(
        "golden_angle",
        MeasureKind.ANGLE,
        {"deg": golden_angle_deg, "rad": golden_angle_rad},
    ),
    "golden_alpha": NamedTarget(
        "golden_alpha",
        MeasureKind.ANGLE,
        {"deg": golden_alpha_deg, "rad": golden_alpha_rad},
    ),
    "pentagon_side": NamedTarget("pentagon_side", MeasureKind.LENGTH, {"": pentagon_side}),
}


def target_measurement(
    name: str,
    digits: int,
    *,
    unit: str = "deg",
    precision: PrecisionSettings | None = None,
) -> Measurement:
    target = TARGETS[name]
    if target.kind is MeasureKind.LENGTH:
        unit = ""
    return measure(name, target.kind, target.evaluator(unit), digits, unit=unit, precision=precision)


def golden_constants(
    digits: int,
    *,
    unit: str = "deg",
    precision: PrecisionSettings | None = None,
) -> tuple[Measurement, Measurement, Measurement]:
    """Certified φ, golden angle and its complement α."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    phi = measure("phi", MeasureKind.RATIO, phi_interval, digits, precision=precision)
    beta = target_measurement("golden_angle", digits, unit=unit, precision=precision)
    alpha = target_measurement("golden_alpha", digits, unit=unit, precision=precision)
    return phi, beta, alpha


def golden_section(total: FieldElement) -> tuple[FieldElement, FieldElement]:
    """
    Split ``total`` exactly into ``(a, b)`` with ``a + b = total`` and
    ``(a + b)/a = a/b = φ``.
    """
    phi = total.tower.phi()
    a = total / phi
    return a, total - a


def golden_angle_trig(
    digits: int,
    *,
    precision: PrecisionSettings | None = None,
) -> dict[str, Measurement]:
    """
    Sine and cosine of β and α. Since α = 2π − β the cosines agree and the
    sines are opposite, so the transcendence of one pair settles the other.
    """
    funcs: dict[str, tuple[Callable[[Interval], Interval], Evaluator]] = {
        "sin_golden_angle": (iv.sin, golden_angle_rad),
        "cos_golden_angle": (iv.cos, golden_angle_rad),
        "sin_golden_alpha": (iv.sin, golden_alpha_rad),
        "cos_golden_alpha": (iv.cos, golden_alpha_rad),
    }
    return {
        name: measure(name, MeasureKind.RATIO, _compose(fn, arg), digits, precision=precision)
        for name, (fn, arg) in funcs.items()
    }


def pentagram_chord_b(bits: int) -> Interval:
    """b = (2/φ)·sin(π/5): the shorter golden part of the pentagon side."""
    return 2 * iv.sin(iv.pi(bits) / 5) / phi_interval(bits)


def pentagram_arc_rad(bits: int) -> Interval:
    """Arc BC = π − arcchord(b) of the pentagram construction."""
    return iv.pi(bits) - arcchord(pentagram_chord_b(bits))


def pentagram_arc_closed_form(
    digits: int,
    *,
    unit: str = "deg",
    precision: PrecisionSettings | None = None,
) -> Measurement:
    """180° − 2·arcsin(sin 36° / φ), the arc the construction approximates β with."""
    evaluate: Evaluator = pentagram_arc_rad if unit == "rad" else (lambda bits: to_degrees(pentagram_arc_rad(bits)))
    return measure("closed_form", MeasureKind.ANGLE, evaluate, digits, unit=unit, precision=precision)


def _compose(fn: Callable[[Interval], Interval], arg: Evaluator) -> Evaluator:
    return lambda bits: fn(arg(bits))
