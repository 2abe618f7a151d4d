class MeasureError(Exception):
    """Base class for numeric measurement failures."""

    code: str = "measure_error"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class DomainError(MeasureError):
    """Argument certainly outside the function's domain (e.g. a chord longer than the diameter)."""

    code = "domain_error"


class ZeroTarget(MeasureError):
    code = "zero_target"


class DegenerateRay(MeasureError):
    """An angle ray of zero length."""

    code = "degenerate_ray"
