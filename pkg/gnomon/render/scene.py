"""
Drawable description of an interpreted construction.

Coordinates are taken from certified decimals of the exact values, so the
scene (and therefore the SVG) is a deterministic function of the script.
"""

import math
from dataclasses import dataclass

from gnomon.core.config import PrecisionSettings, RenderSettings
from gnomon.geometry import Circle
from gnomon.lang import InterpretedModel
from gnomon.lang.ast import CircleRadiusDecl, CircleThroughDecl, LineDecl, MeasureDecl
from gnomon.measure import TARGETS, certify
from gnomon.tower import FieldElement

# Radius of measured-angle arcs, as a fraction of the shorter ray
ANGLE_ARC_FRACTION = 0.2
# Radius of reference arcs, as a fraction of the ray they start from
MARK_ARC_FRACTION = 0.3


@dataclass(frozen=True, slots=True)
class ScenePoint:
    label: str
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class SceneSegment:
    label: str
    x1: float
    y1: float
    x2: float
    y2: float


@dataclass(frozen=True, slots=True)
class SceneCircle:
    label: str
    cx: float
    cy: float
    r: float


@dataclass(frozen=True, slots=True)
class SceneArc:
    """Counter-clockwise arc from ``start_deg`` through ``sweep_deg`` (math orientation, y up)."""

    label: str
    cx: float
    cy: float
    r: float
    start_deg: float
    sweep_deg: float


@dataclass(frozen=True, slots=True)
class SceneDescription:
    points: tuple[ScenePoint, ...] = ()
    segments: tuple[SceneSegment, ...] = ()
    circles: tuple[SceneCircle, ...] = ()
    arcs: tuple[SceneArc, ...] = ()

    def bounds(self) -> tuple[float, float, float, float]:
        """``(xmin, ymin, xmax, ymax)`` covering every drawable."""
        xs: list[float] = []
        ys: list[float] = []
        for p in self.points:
            xs.append(p.x)
            ys.append(p.y)
        for s in self.segments:
            xs += [s.x1, s.x2]
            ys += [s.y1, s.y2]
        for c in (*self.circles, *self.arcs):
            xs += [c.cx - c.r, c.cx + c.r]
            ys += [c.cy - c.r, c.cy + c.r]
        if not xs:
            return (-1.0, -1.0, 1.0, 1.0)
        return (min(xs), min(ys), max(xs), max(ys))


class _SceneBuilder:
    def __init__(self, model: InterpretedModel, settings: RenderSettings, precision: PrecisionSettings) -> None:
        self._model = model
        self._digits = settings.digits
        self._precision = precision
        self._cache: dict[str, tuple[float, float]] = {}

    def number(self, e: FieldElement) -> float:
        _, text = certify(e.approx, self._digits, precision=self._precision, equals=lambda t: e == t)
        return float(text)

    def at(self, name: str) -> tuple[float, float]:
        xy = self._cache.get(name)
        if xy is None:
            p = self._model.point(name)
            xy = (self.number(p.x), self.number(p.y))
            self._cache[name] = xy
        return xy

    def circle(self, name: str) -> SceneCircle:
        c = self._model.env[name]
        assert isinstance(c, Circle)
        cx, cy = self.number(c.center.x), self.number(c.center.y)
        _, text = certify(
            lambda bits: c.radius_sq.approx(bits).sqrt(),
            self._digits,
            precision=self._precision,
            equals=lambda t: t >= 0 and c.radius_sq == t * t,
        )
        return SceneCircle(name, cx, cy, float(text))

    def build(self) -> SceneDescription:
        model = self._model
        points = [ScenePoint(name, *self.at(name)) for name in model.points()]
        segments: list[SceneSegment] = []
        circles: list[SceneCircle] = []
        arcs: list[SceneArc] = []

        for s in model.program.statements:
            match s:
                case LineDecl(name=name, p=p, q=q):
                    segments.append(SceneSegment(name, *self.at(p), *self.at(q)))
                case CircleThroughDecl(name=name) | CircleRadiusDecl(name=name):
                    circles.append(self.circle(name))
                case MeasureDecl(kind="angle", name=name, points=(p, v, q)):
                    arcs.append(self._angle_arc(name, p, v, q))

        for mark in model.marks:
            arc, end = self._mark_arc(mark.name, mark.center, mark.start, mark.target)
            arcs.append(arc)
            cx, cy = arc.cx, arc.cy
            segments.append(SceneSegment(mark.name, cx, cy, *end))

        return SceneDescription(tuple(points), tuple(segments), tuple(circles), tuple(arcs))

    def _angle_arc(self, name: str, p: str, v: str, q: str) -> SceneArc:
        (px, py), (vx, vy), (qx, qy) = self.at(p), self.at(v), self.at(q)
        a1 = math.degrees(math.atan2(py - vy, px - vx))
        a2 = math.degrees(math.atan2(qy - vy, qx - vx))
        sweep = (a2 - a1) % 360.0
        if sweep > 180.0:
            a1, sweep = a2, 360.0 - sweep
        r = ANGLE_ARC_FRACTION * min(math.hypot(px - vx, py - vy), math.hypot(qx - vx, qy - vy))
        measured = self._model.measurement(name)
        return SceneArc(f"{measured.decimal}°", vx, vy, r, a1, sweep)

    def _mark_arc(self, name: str, center: str, start: str, target: str) -> tuple[SceneArc, tuple[float, float]]:
        (cx, cy), (sx, sy) = self.at(center), self.at(start)
        evaluate = TARGETS[target].evaluator("deg")
        _, label = certify(evaluate, self._model.digits, precision=self._precision)
        _, sweep_text = certify(evaluate, self._digits, precision=self._precision)
        sweep = float(sweep_text)
        radius = math.hypot(sx - cx, sy - cy)
        a1 = math.degrees(math.atan2(sy - cy, sx - cx))
        a2 = math.radians(a1 + sweep)
        end = (cx + radius * math.cos(a2), cy + radius * math.sin(a2))
        return SceneArc(f"{label}°", cx, cy, MARK_ARC_FRACTION * radius, a1, sweep), end


def build_scene(
    model: InterpretedModel,
    settings: RenderSettings | None = None,
    precision: PrecisionSettings | None = None,
) -> SceneDescription:
    return _SceneBuilder(model, settings or RenderSettings(), precision or PrecisionSettings()).build()

