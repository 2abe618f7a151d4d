from dataclasses import replace

from gnomon.core.config import PrecisionSettings
from gnomon.measure.certify import RoundingMode, measure
from gnomon.measure.errors import ZeroTarget
from gnomon.measure.types import Evaluator, Measurement, MeasureKind
from gnomon.tower import Interval


def _evaluator(m: Measurement) -> Evaluator:
    if m.evaluator is not None:
        return m.evaluator
    frozen = m.value
    return lambda _bits: frozen


def _require_nonzero(target: Measurement, precision: PrecisionSettings | None) -> None:
    if not target.value.contains_zero():
        return
    settings = precision or PrecisionSettings()
    if _evaluator(target)(settings.max_bits).contains_zero():
        raise ZeroTarget(f"target {target.name!r} is zero; relative error is undefined")


def absolute_error(
    measured: Measurement,
    target: Measurement,
    digits: int | None = None,
    *,
    precision: PrecisionSettings | None = None,
) -> Measurement:
    m, t = _evaluator(measured), _evaluator(target)

    def evaluate(bits: int) -> Interval:
        return abs(m(bits) - t(bits))

    return measure(
        f"{measured.name}_abs_error",
        measured.kind,
        evaluate,
        measured.requested_digits if digits is None else digits,
        unit=measured.unit,
        precision=precision,
    )


def relative_error(
    measured: Measurement,
    target: Measurement,
    digits: int | None = None,
    *,
    mode: RoundingMode = "fixed",
    precision: PrecisionSettings | None = None,
) -> Measurement:
    """``|measured − target| / |target|`` as a certified percentage."""
    _require_nonzero(target, precision)
    m, t = _evaluator(measured), _evaluator(target)

    def evaluate(bits: int) -> Interval:
        reference = t(bits)
        return abs(m(bits) - reference) / abs(reference) * 100

    return measure(
        f"{measured.name}_rel_error",
        MeasureKind.RATIO,
        evaluate,
        measured.requested_digits if digits is None else digits,
        unit="%",
        mode=mode,
        precision=precision,
    )


def attach_target(
    measured: Measurement,
    target: Measurement,
    *,
    precision: PrecisionSettings | None = None,
) -> Measurement:
    abs_err = absolute_error(measured, target, precision=precision)
    rel_err = relative_error(measured, target, precision=precision)
    return replace(
        measured,
        target_name=target.name,
        target_decimal=target.decimal,
        abs_error=abs_err.value,
        abs_error_decimal=abs_err.decimal,
        rel_error=rel_err.value,
        rel_error_percent=rel_err.decimal,
    )
