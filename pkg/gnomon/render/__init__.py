from gnomon.render.scene import SceneArc, SceneCircle, SceneDescription, ScenePoint, SceneSegment, build_scene
from gnomon.render.svg import Viewport, render_svg

__all__ = [
    "SceneDescription",
    "ScenePoint",
    "SceneSegment",
    "SceneCircle",
    "SceneArc",
    "build_scene",
    "render_svg",
    "Viewport",
]
