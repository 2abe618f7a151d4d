class GeometryError(Exception):
    """
    Degenerate straightedge-and-compass input.

    Degeneracy is a hard error: in a verification tool it signals a bug in the
    construction script, not an empty result.
    """

    code: str = "geometry_error"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class CoincidentPoints(GeometryError):
    code = "coincident_points"


class ParallelLines(GeometryError):
    code = "parallel_lines"


class CoincidentLines(GeometryError):
    code = "coincident_lines"


class ConcentricCircles(GeometryError):
    code = "concentric_circles"


class DegenerateLine(GeometryError):
    code = "degenerate_line"


class DegenerateCircle(GeometryError):
    code = "degenerate_circle"
