from dataclasses import dataclass

from gnomon.geometry.errors import DegenerateCircle, DegenerateLine
from gnomon.tower import FieldElement, TowerMismatch
from gnomon.tower.coords import Coords, lift


@dataclass(frozen=True, slots=True)
class Point:
    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        if self.x.tower is not self.y.tower:
            raise TowerMismatch("point coordinates belong to different towers")

    def __sub__(self, other: "Point") -> tuple[FieldElement, FieldElement]:
        return self.x - other.x, self.y - other.y

    def coords(self) -> tuple[Coords, Coords]:
        """Lifted coordinate vectors, for coordinate-identity checks."""
        level = self.x.tower.height
        return lift(self.x.coords, level), lift(self.y.coords, level)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class Line:
    """
    The line a·x + b·y + c = 0, stored as an unnormalized projective triple.
    """

    a: FieldElement
    b: FieldElement
    c: FieldElement

    def __post_init__(self) -> None:
        if self.a.is_zero() and self.b.is_zero():
            raise DegenerateLine("line coefficients a and b are both zero")

    def evaluate(self, p: Point) -> FieldElement:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.evaluate(p).is_zero()

    def same_as(self, other: "Line") -> bool:
        """Exact proportionality of the two coefficient triples."""
        return (
            (self.a * other.b - other.a * self.b).is_zero()
            and (self.a * other.c - other.a * self.c).is_zero()
            and (self.b * other.c - other.b * self.c).is_zero()
        )

    def __str__(self) -> str:
        return f"({self.a})·x + ({self.b})·y + ({self.c}) = 0"


@dataclass(frozen=True, slots=True)
class Circle:
    """A circle by center and squared radius; radii themselves are never needed for incidence."""

    center: Point
    radius_sq: FieldElement

    def __post_init__(self) -> None:
        if self.radius_sq.sign() <= 0:
            raise DegenerateCircle("circle radius must be positive")

    def evaluate(self, p: Point) -> FieldElement:
        dx, dy = p - self.center
        return dx * dx + dy * dy - self.radius_sq

    def contains(self, p: Point) -> bool:
        return self.evaluate(p).is_zero()

    def __str__(self) -> str:
        return f"circle(center={self.center}, r²={self.radius_sq})"
