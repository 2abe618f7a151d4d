from fractions import Fraction

import pytest
from gnomon.core.config import PrecisionSettings
from gnomon.tower import (
    DivisionByZero,
    FieldElement,
    NegativeRadicand,
    PrecisionExhausted,
    Tower,
    TowerError,
    TowerFrozen,
    TowerMismatch,
)
from hypothesis import given, settings
from hypothesis import strategies as st

# Helpers


def three_level_tower() -> tuple[Tower, FieldElement, FieldElement, FieldElement]:
    t = Tower()
    return t, t.sqrt(2), t.sqrt(3), t.sqrt(5)


_TOWER, _R2, _R3, _R5 = three_level_tower()

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def elements(draw) -> FieldElement:
    coords = tuple(draw(small_rationals) for _ in range(8))
    return _TOWER.element(coords)


@st.composite
def nonzero_elements(draw) -> FieldElement:
    e = draw(elements())
    if e.is_zero():
        return _TOWER.one()
    return e


# Tests: structure


class TestTowerStructure:
    def test_fresh_tower_is_the_rationals(self):
        t = Tower()
        assert t.height == 0
        assert t.describe() == "Q"

    def test_sqrt_of_non_square_adjoins_one_level(self):
        t = Tower()
        r = t.sqrt(2)
        assert t.height == 1
        assert t.generation == 1
        assert r * r == 2

    def test_sqrt_of_rational_square_stays_rational(self):
        t = Tower()
        assert t.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert t.height == 0

    def test_sqrt_of_multiple_of_radicand_is_found_in_tower(self):
        t = Tower()
        r2 = t.sqrt(2)
        assert t.sqrt(8) == 2 * r2
        assert t.height == 1

    def test_product_of_radicands_becomes_square_after_both_adjoined(self):
        t = Tower()
        r2, r3 = t.sqrt(2), t.sqrt(3)
        assert t.sqrt(6) == r2 * r3
        assert t.height == 2

    def test_nested_square_is_detected(self):
        # (1 + √2)² = 3 + 2√2
        t = Tower()
        r2 = t.sqrt(2)
        root = t.sqrt(3 + 2 * r2)
        assert root == 1 + r2
        assert t.height == 1

    def test_sqrt_returns_non_negative_root(self):
        # (1 − √2)² = 3 − 2√2, and the non-negative root is √2 − 1
        t = Tower()
        r2 = t.sqrt(2)
        root = t.sqrt(3 - 2 * r2)
        assert root == r2 - 1
        assert root.sign() == 1

    def test_sqrt_zero_is_zero(self):
        t = Tower()
        assert t.sqrt(0).is_zero()
        assert t.height == 0

    def test_sqrt_of_negative_raises(self):
        t = Tower()
        with pytest.raises(NegativeRadicand):
            t.sqrt(-1)

    def test_frozen_tower_refuses_to_grow_but_finds_roots(self):
        t = Tower()
        r5 = t.sqrt(5)
        t.freeze()
        assert t.sqrt(20) == 2 * r5
        with pytest.raises(TowerFrozen):
            t.sqrt(7)

    def test_nested_radical_denests_into_existing_levels(self):
        # (√2 + √3)² = 5 + 2√6
        t = Tower()
        r2, r3 = t.sqrt(2), t.sqrt(3)
        height = t.height
        root = t.sqrt(5 + 2 * r2 * r3)
        assert root == r2 + r3
        assert t.height == height

    def test_adjoin_grows_the_tower(self):
        t = Tower()
        r7 = t.adjoin(7)
        assert t.height == 1
        assert t.generation == 1
        assert r7 * r7 == 7
        assert r7.sign() == 1

    def test_adjoin_on_frozen_tower_raises(self):
        t = Tower()
        t.freeze()
        with pytest.raises(TowerFrozen):
            t.adjoin(7)
        assert t.height == 0

    def test_adjoin_rejects_a_square(self):
        t = Tower()
        r2 = t.adjoin(2)
        with pytest.raises(TowerError):
            t.adjoin(8)
        with pytest.raises(TowerError):
            t.adjoin(3 + 2 * r2)
        assert t.height == 1

    def test_adjoin_rejects_a_negative_radicand(self):
        t = Tower()
        with pytest.raises(NegativeRadicand):
            t.adjoin(-3)

    def test_root_never_grows_the_tower(self):
        t = Tower()
        r2 = t.sqrt(2)
        assert t.root(3) is None
        assert t.root(8) == 2 * r2
        assert t.height == 1

    def test_phi_satisfies_its_minimal_polynomial(self):
        t = Tower()
        phi = t.phi()
        assert phi * phi - phi - 1 == 0

    def test_elements_of_lower_levels_stay_valid_after_growth(self):
        t = Tower()
        r2 = t.sqrt(2)
        r3 = t.sqrt(3)
        assert (r2 + r3) * (r3 - r2) == 1

    def test_element_rejects_bad_coordinate_length(self):
        t = Tower()
        with pytest.raises(ValueError):
            t.element((Fraction(1), Fraction(2), Fraction(3)))


# Tests: arithmetic and errors


class TestArithmetic:
    def test_division_by_zero_raises(self):
        t = Tower()
        r2 = t.sqrt(2)
        with pytest.raises(DivisionByZero):
            (r2 + 1) / (r2 - r2)

    def test_mixing_towers_raises(self):
        a, b = Tower(), Tower()
        with pytest.raises(TowerMismatch):
            a.sqrt(2) + b.sqrt(2)

    def test_inverse_of_nested_element(self):
        t = Tower()
        r2, r3 = t.sqrt(2), t.sqrt(3)
        x = 1 + r2 + r3 + r2 * r3
        assert x * x.inv() == 1

    def test_negative_power(self):
        t = Tower()
        phi = t.phi()
        assert phi**-1 == phi - 1

    def test_rational_round_trip(self):
        t = Tower()
        t.sqrt(2)
        x = t.rational(Fraction(7, 3))
        assert x.is_rational()
        assert x.to_fraction() == Fraction(7, 3)

    def test_to_fraction_of_irrational_raises(self):
        t = Tower()
        with pytest.raises(ValueError):
            t.sqrt(2).to_fraction()

    def test_hash_agrees_with_equality(self):
        t = Tower()
        r2 = t.sqrt(2)
        t.sqrt(3)
        assert hash(t.rational(3)) == hash(Fraction(3))
        assert hash(r2 * r2) == hash(t.rational(2))

    def test_str_lists_basis_terms(self):
        t = Tower()
        r2 = t.sqrt(2)
        assert str(1 - r2) == "1 - √r0"
        assert str(t.zero()) == "0"


# Tests: sign and ordering


class TestSign:
    def test_sign_of_close_but_distinct_values(self):
        # √2 + √3 = 3.14626...
        t = Tower()
        r2, r3 = t.sqrt(2), t.sqrt(3)
        assert (r2 + r3 - Fraction(3146, 1000)).sign() == 1
        assert (r2 + r3 - Fraction(3147, 1000)).sign() == -1

    def test_sign_needs_refinement_beyond_start_precision(self):
        # √2 − p/q for a continued-fraction convergent far beyond 64 bits
        t = Tower()
        r2 = t.sqrt(2)
        p, q = 1, 1
        for _ in range(60):
            p, q = p + 2 * q, p + q
        assert (r2 - Fraction(p, q)).sign() != 0

    def test_ordering_operators(self):
        t = Tower()
        phi = t.phi()
        assert phi > Fraction(8, 5)
        assert phi < Fraction(13, 8)
        assert phi >= phi

    def test_precision_ceiling_is_reported(self):
        t = Tower(PrecisionSettings(start_bits=16, max_bits=32))
        r2 = t.sqrt(2)
        p, q = 1, 1
        for _ in range(60):
            p, q = p + 2 * q, p + q
        with pytest.raises(PrecisionExhausted):
            (r2 - Fraction(p, q)).sign()

    def test_approx_encloses_value(self):
        t = Tower()
        phi = t.phi()
        iv = phi.approx(128)
        lo, hi = iv.to_fractions()
        assert lo < hi
        assert lo > Fraction(1618033988, 10**9)
        assert hi < Fraction(1618033989, 10**9)

    def test_approx_narrows_as_precision_doubles(self):
        t = Tower()
        x = t.phi() + t.sqrt(3) * t.sqrt(7)
        widths = [x.approx(bits).width for bits in (64, 128, 256, 512, 1024, 2048)]
        assert all(wider > narrower for wider, narrower in zip(widths, widths[1:]))

    def test_zero_built_from_radicals_is_enclosed_at_every_precision(self):
        t = Tower()
        r2, r3 = t.sqrt(2), t.sqrt(3)
        z = (r2 + r3) * (r3 - r2) - 1
        assert z.is_zero()
        for bits in (16, 64, 256, 1024):
            assert z.approx(bits).contains_zero()

    def test_small_nonzero_is_separated_from_zero_by_precision(self):
        # p/q is a continued-fraction convergent of √2, so r2 − p/q is tiny but nonzero
        t = Tower()
        r2 = t.sqrt(2)
        p, q = 1, 1
        for _ in range(20):
            p, q = p + 2 * q, p + q
        x = r2 - Fraction(p, q)
        assert not x.is_zero()
        assert x.approx(16).contains_zero()
        assert not x.approx(1024).contains_zero()
        assert x.approx(1024).sign() == x.sign()

    def test_approx_rejects_tiny_precision(self):
        with pytest.raises(ValueError):
            Tower().approx(1, 4)


# Tests: field axioms (property-based)


class TestFieldAxioms:
    @settings(max_examples=1000, deadline=None)
    @given(elements(), elements(), elements())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @settings(max_examples=300, deadline=None)
    @given(nonzero_elements())
    def test_inverse(self, a):
        assert a * a.inv() == 1

    @settings(max_examples=100, deadline=None)
    @given(nonzero_elements())
    def test_sqrt_of_square(self, a):
        root = (a * a).sqrt()
        assert root * root == a * a
        assert root.sign() >= 0
        assert root == a or root == -a

    @settings(max_examples=100, deadline=None)
    @given(
        st.fractions(min_value=Fraction(1, 8), max_value=50, max_denominator=12),
        st.fractions(min_value=-3, max_value=3, max_denominator=6),
    )
    def test_sqrt_squares_back_to_its_argument(self, q, b):
        t = Tower()
        x = q + b * t.sqrt(2)
        if x.sign() <= 0:
            x = -x
        root = t.sqrt(x)
        assert root * root == x
        assert root.sign() >= 0

    @settings(max_examples=200, deadline=None)
    @given(elements(), elements())
    def test_sign_is_consistent_with_subtraction(self, a, b):
        assert a.compare(b) == -b.compare(a)
        assert (a - b).sign() == a.compare(b)
