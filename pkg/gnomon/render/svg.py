"""
SVG emission with drawsvg.

The scene lives in a y-up mathematical frame; it is mapped onto a square
y-down screen viewport at render time. Stroke widths and label offsets are
fixed, and every coordinate is rounded, so identical scenes give identical bytes.
"""

import math

import drawsvg as draw

from gnomon.render.scene import SceneArc, SceneDescription

MARGIN_FRACTION = 0.08
LABEL_DX, LABEL_DY = 6.0, -6.0
STROKE = "#1f2933"
CONSTRUCTION_STROKE = "#9aa5b1"
ARC_STROKE = "#c0392b"
FONT_SIZE = 12


class Viewport:
    """Affine map from scene coordinates to a ``size`` × ``size`` screen box."""

    def __init__(self, bounds: tuple[float, float, float, float], size: int) -> None:
        if size <= 0:
            raise ValueError(f"viewport size must be positive, got {size}")
        xmin, ymin, xmax, ymax = bounds
        span = max(xmax - xmin, ymax - ymin) or 1.0
        margin = size * MARGIN_FRACTION
        self.size = size
        self.scale = (size - 2 * margin) / span
        # center the scene inside the square
        self.ox = margin + ((size - 2 * margin) - (xmax - xmin) * self.scale) / 2 - xmin * self.scale
        self.oy = margin + ((size - 2 * margin) - (ymax - ymin) * self.scale) / 2 + ymax * self.scale

    def x(self, x: float) -> float:
        return _r(self.ox + x * self.scale)

    def y(self, y: float) -> float:
        return _r(self.oy - y * self.scale)

    def length(self, d: float) -> float:
        return _r(d * self.scale)


def render_svg(scene: SceneDescription, size: int) -> str:
    vp = Viewport(scene.bounds(), size)
    d = draw.Drawing(size, size)
    d.append(draw.Rectangle(0, 0, size, size, fill="white"))

    for c in scene.circles:
        d.append(
            draw.Circle(
                vp.x(c.cx),
                vp.y(c.cy),
                vp.length(c.r),
                fill="none",
                stroke=CONSTRUCTION_STROKE,
                stroke_width=1,
            )
        )

    for s in scene.segments:
        d.append(draw.Line(vp.x(s.x1), vp.y(s.y1), vp.x(s.x2), vp.y(s.y2), stroke=STROKE, stroke_width=1.5))

    for a in scene.arcs:
        d.append(_arc_path(vp, a))
        mid = math.radians(a.start_deg + a.sweep_deg / 2)
        lx = a.cx + 1.3 * a.r * math.cos(mid)
        ly = a.cy + 1.3 * a.r * math.sin(mid)
        d.append(_label(a.label, vp.x(lx), vp.y(ly), fill=ARC_STROKE))

    for p in scene.points:
        px, py = vp.x(p.x), vp.y(p.y)
        d.append(draw.Circle(px, py, 2.5, fill=STROKE))
        d.append(_label(p.label, _r(px + LABEL_DX), _r(py + LABEL_DY), fill=STROKE))

    return d.as_svg()


def _arc_path(vp: Viewport, a: SceneArc) -> draw.Path:
    t0 = math.radians(a.start_deg)
    t1 = math.radians(a.start_deg + a.sweep_deg)
    r = vp.length(a.r)
    large = 1 if a.sweep_deg > 180.0 else 0
    path = draw.Path(fill="none", stroke=ARC_STROKE, stroke_width=1.5)
    # counter-clockwise in the y-up frame is sweep-flag 0 on screen
    path.M(vp.x(a.cx + a.r * math.cos(t0)), vp.y(a.cy + a.r * math.sin(t0)))
    path.A(r, r, 0, large, 0, vp.x(a.cx + a.r * math.cos(t1)), vp.y(a.cy + a.r * math.sin(t1)))
    return path


def _label(text: str, x: float, y: float, *, fill: str) -> draw.Text:
    return draw.Text(text, FONT_SIZE, x, y, fill=fill, font_family="sans-serif")


def _r(v: float) -> float:
    return round(v, 3) + 0.0
