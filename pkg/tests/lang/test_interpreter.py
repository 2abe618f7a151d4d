from fractions import Fraction

import pytest
from gnomon.core.config import Settings
from gnomon.corpus import corpus_text
from gnomon.geometry import Point
from gnomon.lang import (
    AssertionFailed,
    EvaluationError,
    NoSuchIntersection,
    format_diagnostics,
    interpret,
    parse,
)
from gnomon.measure import MeasureKind
from gnomon.tower import TowerFrozen

# Helpers


def run(text: str, digits: int = 2, filename: str = "t.euclid"):
    return interpret(parse(text, filename=filename), digits=digits)


def run_corpus(name: str, digits: int = 2):
    return interpret(parse(corpus_text(name), filename=f"{name}.euclid"), digits=digits)


UNIT_CIRCLE = """\
point O = (0, 0)
point E = (1, 0)
circle c = center O through E
line l = O E
"""


# Tests: corpus


class TestCorpus:
    def test_equilateral_smoke(self):
        model = run_corpus("smoke_equilateral")
        assert model.passed
        assert len(model.assertions) == 5
        assert model.measurement("apex").display == "60.00 deg"
        assert model.measurement("edge").display == "1.00"
        assert model.tower.height == 1
        assert model.tower.frozen

    def test_pentagram_golden_angle(self):
        model = run_corpus("pentagram_golden_angle")
        assert model.passed
        arc = model.measurement("arcBC")
        assert arc.display == "137.40 deg"
        assert arc.target_name == "golden_angle"
        assert arc.target_decimal == "137.51"
        assert arc.abs_error_decimal == "0.11"
        assert arc.rel_error_percent == "0.08"

    def test_pentagram_at_five_digits(self):
        model = run_corpus("pentagram_golden_angle", digits=5)
        arc = model.measurement("arcBC")
        assert arc.decimal == "137.39757"
        assert arc.target_decimal == "137.50776"

    def test_pentagram_side_matches_pentagon_chord(self):
        model = run_corpus("pentagram_golden_angle", digits=10)
        side = model.measurement("side")
        assert side.kind is MeasureKind.LENGTH
        assert side.decimal == side.target_decimal == "1.1755705046"

    def test_pentagram_intersection_point(self):
        model = run_corpus("pentagram_golden_angle")
        d = model.point("D")
        lo, hi = d.x.approx(64).to_fractions()
        assert Fraction(-309017, 10**6) < lo and hi < Fraction(-309016, 10**6)
        lo, hi = d.y.approx(64).to_fractions()
        assert Fraction(224513, 10**6) < lo and hi < Fraction(224514, 10**6)

    def test_compass_pentagon(self):
        model = run_corpus("pentagon_richmond")
        assert model.passed
        assert model.measurement("sideAV1").decimal == "1.18"

    def test_golden_angle_mark(self):
        model = run_corpus("golden_angle")
        assert [m.name for m in model.marks] == ["golden"]
        assert model.marks[0].target == "golden_angle"
        assert model.measurements == ()
        assert model.passed

    @pytest.mark.parametrize(
        "name", ["smoke_equilateral", "pentagon_richmond", "pentagram_golden_angle", "golden_angle"]
    )
    def test_interpretation_is_deterministic(self, name):
        first, second = run_corpus(name), run_corpus(name)
        assert first.tower.radicand_coords == second.tower.radicand_coords
        assert {k: p.coords() for k, p in first.points().items()} == {
            k: p.coords() for k, p in second.points().items()
        }
        assert [m.decimal for m in first.measurements] == [m.decimal for m in second.measurements]


# Tests: statements


class TestStatements:
    def test_where_filter_applies_before_index(self):
        model = run(UNIT_CIRCLE + "point T = (0, 5)\nline m = O T\npoint U = intersect(c, m) where y > 0")
        assert model.point("U") == Point(model.tower.zero(), model.tower.one())

    def test_index_selects_canonical_order(self):
        model = run(UNIT_CIRCLE + "point L = intersect(l, c)[0]\npoint R = intersect(l, c)[1]")
        assert model.point("L").x == -1
        assert model.point("R").x == 1

    def test_missing_intersection_is_reported(self):
        text = UNIT_CIRCLE + "point T = (0, 5)\nline m = O T\npoint U = intersect(c, m)[1] where y > 0"
        with pytest.raises(NoSuchIntersection) as exc:
            run(text)
        assert exc.value.line == 7
        assert "no intersection #1 with y > 0 of 'c' and 'm' (2 found)" in str(exc.value)

    def test_circle_with_transferred_radius(self):
        model = run(
            UNIT_CIRCLE + "point F = (3, 0)\ncircle d = center F radius dist(O, E)\npoint G = intersect(l, d)[0]"
        )
        assert model.point("G").x == 2

    def test_length_on_a_rounding_tie(self):
        model = run("point O = (0, 0)\npoint P = (1 / 8, 0)\nmeasure length L = dist(O, P)\n")
        assert model.measurement("L").decimal == "0.13"
        assert model.tower.height == 0

    def test_let_and_assertions(self):
        model = run("let a = phi ^ 2\nassert_zero(a - phi - 1)\nassert_zero(a - 2)")
        assert [a.passed for a in model.assertions] == [True, False]
        assert model.assertions[1].sign == 1
        assert not model.passed

    def test_failures_are_located_diagnostics(self):
        model = run("let a = 1\nassert_zero(a - 2)", filename="f.euclid")
        failures = list(model.failures())
        assert len(failures) == 1
        assert isinstance(failures[0], AssertionFailed)
        assert format_diagnostics(failures) == "f.euclid:2:1: assertion failed: sign of difference = -1\n"

    def test_assertion_location(self):
        model = run("let a = 1\n\nassert_zero(a - 1)", filename="f.euclid")
        assert model.assertions[0].to_dict() == {"location": "f.euclid:3:1", "passed": True}

    def test_scalar_and_point_accessors(self):
        model = run(UNIT_CIRCLE + "let k = x(E) + y(E)")
        assert model.scalar("k") == 1
        assert set(model.points()) == {"O", "E"}
        with pytest.raises(TypeError):
            model.point("k")

    def test_env_is_read_only(self):
        model = run("let a = 1")
        with pytest.raises(TypeError):
            model.env["b"] = model.scalar("a")  # type: ignore[index]

    def test_tower_is_frozen_after_run(self):
        model = run("let a = sqrt(2)")
        with pytest.raises(TowerFrozen):
            model.tower.sqrt(3)

    def test_settings_precision_reaches_the_tower(self):
        settings = Settings()
        model = interpret(parse("let a = 1"), settings=settings)
        assert model.tower.precision == settings.precision


# Tests: evaluation errors


class TestEvaluationErrors:
    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("let a = 1 / (2 - 2)", 1, "division by zero"),
            ("let a = 1\nlet b = sqrt(a - 2)", 2, "square root of a negative number"),
            ("point O = (0, 0)\npoint P = (0, 0)\nline l = O P", 3, "single point"),
            ("point O = (0, 0)\ncircle c = center O through O", 2, "zero radius"),
            (
                "point O = (0, 0)\npoint E = (1, 0)\npoint F = (0, 1)\npoint G = (1, 1)\n"
                "line a = O E\nline b = F G\npoint X = intersect(a, b)",
                7,
                "parallel",
            ),
            ("point O = (0, 0)\npoint E = (1, 0)\nmeasure angle m = angle(O, O, E)", 3, "zero length"),
        ],
    )
    def test_errors_are_located(self, text, line, fragment):
        with pytest.raises(EvaluationError) as exc:
            run(text, filename="e.euclid")
        assert exc.value.file == "e.euclid"
        assert exc.value.line == line
        assert fragment in exc.value.message

    def test_error_column_points_at_the_failing_subexpression(self):
        with pytest.raises(EvaluationError) as exc:
            run("let a = 1 + 1 / 0")
        assert exc.value.column == 15
        assert exc.value.details == {"cause": "division_by_zero"}
