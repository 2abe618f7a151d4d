from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from gnomon.tower import coords as C
from gnomon.tower.coords import Coords
from gnomon.tower.errors import DivisionByZero, TowerMismatch
from gnomon.tower.interval import Interval

if TYPE_CHECKING:
    from gnomon.tower.tower import Tower

Scalar = Union["FieldElement", int, Fraction]


@dataclass(frozen=True, slots=True, eq=False)
class FieldElement:
    """
    An exact real number of a quadratic tower, stored as a coordinate vector
    over the product basis of the adjoined square roots.

    Elements of lower levels are lifted on demand, so values created before
    the tower grew stay valid. Equality and hashing are by value.
    """

    tower: "Tower"
    coords: Coords

    @property
    def level(self) -> int:
        return C.level_of(self.coords)

    # Coercion

    def _coerce(self, other: Scalar) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.tower is not self.tower:
                raise TowerMismatch("cannot combine elements of different construction contexts")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.tower.rational(other)
        raise TypeError(f"unsupported operand type: {type(other).__name__}")

    def _wrap(self, c: Coords) -> "FieldElement":
        return FieldElement(self.tower, c)

    # Field operations

    def __add__(self, other: Scalar) -> "FieldElement":
        return self._wrap(C.add(self.coords, self._coerce(other).coords))

    def __radd__(self, other: Scalar) -> "FieldElement":
        return self._coerce(other) + self

    def __sub__(self, other: Scalar) -> "FieldElement":
        return self._wrap(C.sub(self.coords, self._coerce(other).coords))

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return self._coerce(other) - self

    def __neg__(self) -> "FieldElement":
        return self._wrap(C.neg(self.coords))

    def __pos__(self) -> "FieldElement":
        return self

    def __mul__(self, other: Scalar) -> "FieldElement":
        o = self._coerce(other)
        return self._wrap(C.mul(self.coords, o.coords, self.tower.radicand_coords))

    def __rmul__(self, other: Scalar) -> "FieldElement":
        return self._coerce(other) * self

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("division by zero (exact)")
        return self._wrap(C.inv(self.coords, self.tower.radicand_coords))

    def __truediv__(self, other: Scalar) -> "FieldElement":
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int) -> "FieldElement":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        result = self.tower.one()
        for _ in range(abs(n)):
            result = result * base
        return result

    # Exact predicates

    def is_zero(self) -> bool:
        return C.is_zero(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return len(C.reduce(self.coords)) == 1

    def to_fraction(self) -> Fraction:
        reduced = C.reduce(self.coords)
        if len(reduced) != 1:
            raise ValueError(f"{self} is not rational")
        return reduced[0]

    def sign(self) -> int:
        return self.tower.sign(self)

    def sqrt(self) -> "FieldElement":
        return self.tower.sqrt(self)

    def approx(self, precision_bits: int) -> Interval:
        return self.tower.approx(self, precision_bits)

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, bool) or not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return (self - self._coerce(other)).is_zero()

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        reduced = C.reduce(self.coords)
        if len(reduced) == 1:
            return hash(reduced[0])
        return hash(reduced)

    def compare(self, other: Scalar) -> int:
        return (self - self._coerce(other)).sign()

    def __lt__(self, other: Scalar) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Scalar) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Scalar) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Scalar) -> bool:
        return self.compare(other) >= 0

    # Display

    def __str__(self) -> str:
        terms: list[str] = []
        for index, q in enumerate(C.reduce(self.coords)):
            if q == 0:
                continue
            basis = "·".join(f"√r{i}" for i in range(index.bit_length()) if index >> i & 1)
            if not basis:
                terms.append(str(q))
            elif q == 1:
                terms.append(basis)
            elif q == -1:
                terms.append(f"-{basis}")
            else:
                terms.append(f"{q}·{basis}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"FieldElement({self})"
