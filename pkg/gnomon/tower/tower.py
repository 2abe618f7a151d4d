import logging
from fractions import Fraction

from gnomon.core.config import PrecisionSettings
from gnomon.tower import coords as C
from gnomon.tower.coords import Coords
from gnomon.tower.element import FieldElement, Scalar
from gnomon.tower.errors import NegativeRadicand, PrecisionExhausted, TowerError, TowerFrozen
from gnomon.tower.interval import Interval
from gnomon.tower.roots import find_root

logger = logging.getLogger(__name__)

MIN_PRECISION_BITS = 8


class Tower:
    """
    A chain of real quadratic extensions Q ⊂ Q(√r0) ⊂ Q(√r0)(√r1) ⊂ ...

    Invariants:
      - every radicand is strictly positive;
      - no radicand is a square of the tower below it (faithfulness), so an
        element is zero iff all its coordinates are zero;
      - levels are append-only.

    Growth (``sqrt`` adjoining a new radicand) requires a single writer. After
    ``freeze()`` the tower and its elements may be shared for read-only use.
    """

    def __init__(self, precision: PrecisionSettings | None = None) -> None:
        self._radicands: list[Coords] = []
        self._generation = 0
        self._frozen = False
        self._precision = precision or PrecisionSettings()
        self._root_intervals: dict[tuple[int, int], Interval] = {}

    # Structure

    @property
    def height(self) -> int:
        return len(self._radicands)

    @property
    def generation(self) -> int:
        return self._generation

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def precision(self) -> PrecisionSettings:
        return self._precision

    @property
    def radicand_coords(self) -> tuple[Coords, ...]:
        return tuple(self._radicands)

    @property
    def levels(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self, r) for r in self._radicands)

    def radicand(self, k: int) -> FieldElement:
        return FieldElement(self, self._radicands[k])

    def freeze(self) -> None:
        self._frozen = True

    # Element construction

    def element(self, coords: Coords) -> FieldElement:
        n = len(coords)
        if n == 0 or n & (n - 1) or C.level_of(coords) > self.height:
            raise ValueError(f"coordinate vector of length {n} does not fit a tower of height {self.height}")
        return FieldElement(self, tuple(Fraction(q) for q in coords))

    def rational(self, q: int | Fraction) -> FieldElement:
        return FieldElement(self, (Fraction(q),))

    def zero(self) -> FieldElement:
        return self.rational(0)

    def one(self) -> FieldElement:
        return self.rational(1)

    def phi(self) -> FieldElement:
        """The golden number (1 + √5)/2."""
        return (1 + self.sqrt(self.rational(5))) / 2

    # Field operations (functional spelling of the FieldElement operators)

    def add(self, x: Scalar, y: Scalar) -> FieldElement:
        return self._own(x) + y

    def sub(self, x: Scalar, y: Scalar) -> FieldElement:
        return self._own(x) - y

    def mul(self, x: Scalar, y: Scalar) -> FieldElement:
        return self._own(x) * y

    def div(self, x: Scalar, y: Scalar) -> FieldElement:
        return self._own(x) / y

    def neg(self, x: Scalar) -> FieldElement:
        return -self._own(x)

    def inv(self, x: Scalar) -> FieldElement:
        return self._own(x).inv()

    def is_zero(self, x: Scalar) -> bool:
        return self._own(x).is_zero()

    def _own(self, x: Scalar) -> FieldElement:
        return self.zero()._coerce(x)

    # Numeric evaluation

    def approx(self, x: Scalar, precision_bits: int) -> Interval:
        """Outward-rounded enclosure of ``x`` at the given working precision."""
        if precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
        return self._approx(self._own(x).coords, precision_bits)

    def _approx(self, c: Coords, prec: int) -> Interval:
        if len(c) == 1:
            return Interval.from_fraction(c[0], prec)
        a, b = C.split(c)
        low = self._approx(a, prec)
        if C.is_zero(b):
            return low
        return low + self._approx(b, prec) * self._root_interval(C.level_of(c) - 1, prec)

    def _root_interval(self, k: int, prec: int) -> Interval:
        key = (k, prec)
        cached = self._root_intervals.get(key)
        if cached is None:
            cached = self._approx(self._radicands[k], prec).sqrt()
            self._root_intervals[key] = cached
        return cached

    def sign(self, x: Scalar) -> int:
        """
        Exact sign. Zero is decided on coordinates; otherwise the enclosure is
        refined by doubling precision until it excludes zero.
        """
        c = self._own(x).coords
        if C.is_zero(c):
            return 0
        reduced = C.reduce(c)
        if len(reduced) == 1:
            return 1 if reduced[0] > 0 else -1

        bits = self._precision.start_bits
        while bits <= self._precision.max_bits:
            s = self._approx(c, bits).sign()
            if s:
                return s
            logger.debug("sign undecided at %d bits, doubling", bits)
            bits *= 2
        raise PrecisionExhausted(
            f"sign of a nonzero element undecided at {self._precision.max_bits} bits",
            details={"max_bits": self._precision.max_bits},
        )

    # Square roots

    def sqrt(self, x: Scalar) -> FieldElement:
        """
        Non-negative square root. Returns the in-tower root when one exists;
        otherwise adjoins ``x`` as a new radicand.
        """
        e = self._own(x)
        y = self.root(e)
        if y is not None:
            return y
        return self._adjoin(e)

    def root(self, x: Scalar) -> FieldElement | None:
        """Non-negative square root inside the current tower, or None. Never grows the tower."""
        e = self._own(x)
        s = e.sign()
        if s < 0:
            raise NegativeRadicand(f"square root of a negative number ({e})")
        if s == 0:
            return self.zero()

        found = find_root(e.coords, self._radicands)
        if found is None:
            return None
        y = FieldElement(self, found)
        if y.sign() < 0:
            y = -y
        logger.debug("sqrt(%s) found in tower of height %d", e, self.height)
        return y

    def adjoin(self, x: Scalar) -> FieldElement:
        """
        Adjoin √x as a new level and return it.

        ``x`` must be positive and not already a square in the tower; use
        :meth:`sqrt` when either case may occur.
        """
        e = self._own(x)
        if self._frozen:
            raise TowerFrozen(f"tower is frozen; cannot adjoin √({e})")
        if self.root(e) is not None:
            raise TowerError(f"{e} is already a square in the tower", details={"height": self.height})
        return self._adjoin(e)

    def _adjoin(self, radicand: FieldElement) -> FieldElement:
        if self._frozen:
            raise TowerFrozen(f"tower is frozen; cannot adjoin √({radicand})")
        level = self.height
        self._radicands.append(C.lift(radicand.coords, level))
        self._generation += 1
        logger.debug("adjoined level %d: √(%s)", level, radicand)

        basis = [Fraction(0)] * (1 << (level + 1))
        basis[1 << level] = Fraction(1)
        return FieldElement(self, tuple(basis))

    def describe(self) -> str:
        return ", ".join(f"r{k} = {self.radicand(k)}" for k in range(self.height)) or "Q"
