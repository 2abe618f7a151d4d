from gnomon.measure.angles import angle_equals, angle_evaluator, central_angle, length
from gnomon.measure.certify import certify, measure, round_half_up
from gnomon.measure.compare import absolute_error, attach_target, relative_error
from gnomon.measure.errors import DegenerateRay, DomainError, MeasureError, ZeroTarget
from gnomon.measure.golden import (
    ANGLE_TARGETS,
    TARGETS,
    AngleTargets,
    pentagram_arc_closed_form,
    golden_angle_trig,
    golden_constants,
    golden_section,
    target_measurement,
)
from gnomon.measure.trig import arcchord, chord, to_degrees, to_radians
from gnomon.measure.types import Evaluator, Measurement, MeasureKind

__all__ = [
    "Measurement",
    "MeasureKind",
    "Evaluator",
    "AngleTargets",
    "ANGLE_TARGETS",
    "TARGETS",
    # Numerics
    "certify",
    "measure",
    "round_half_up",
    "chord",
    "arcchord",
    "to_degrees",
    "to_radians",
    "angle_equals",
    "angle_evaluator",
    "central_angle",
    "length",
    "golden_constants",
    "golden_section",
    "golden_angle_trig",
    "pentagram_arc_closed_form",
    "target_measurement",
    "absolute_error",
    "relative_error",
    "attach_target",
    # Errors
    "MeasureError",
    "DomainError",
    "ZeroTarget",
    "DegenerateRay",
]
