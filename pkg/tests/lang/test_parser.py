from pathlib import Path

import pytest
from gnomon.lang import (
    DefaultScriptParser,
    DuplicateIdentifier,
    EuclidSyntaxError,
    KindMismatch,
    UnknownTarget,
    UseBeforeDeclaration,
    parse,
    parse_file,
)
from gnomon.lang.ast import (
    BinaryAst,
    CircleRadiusDecl,
    IntAst,
    IntersectDecl,
    LetDecl,
    MarkArcDecl,
    MeasureDecl,
    NameAst,
    NegAst,
    PhiAst,
    PointDecl,
    PowAst,
    SignFilter,
    SqrtAst,
)

PREAMBLE = """\
point O = (0, 0)
point E = (1, 0)
circle c = center O through E
line l = O E
"""


def parse_one(line: str):
    return parse(PREAMBLE + line).statements[-1]


def let_expr(text: str):
    stmt = parse(f"let k = {text}").statements[0]
    assert isinstance(stmt, LetDecl)
    return stmt.expr


# Tests: statements


class TestStatements:
    def test_point_literal(self):
        stmt = parse("point P = (1, -2)").statements[0]
        assert stmt == PointDecl("P", IntAst(1), NegAst(IntAst(2)))

    def test_span_records_statement_start(self):
        stmt = parse("\n\n  point P = (1, 2)", filename="s.euclid").statements[0]
        assert stmt.span is not None
        assert (stmt.span.file, stmt.span.line, stmt.span.column) == ("s.euclid", 3, 3)

    def test_intersect_with_index_and_filter(self):
        stmt = parse_one("point X = intersect(c, l)[1] where y > 0")
        assert stmt == IntersectDecl("X", "c", "l", 1, SignFilter(axis="y", op=">"))

    def test_intersect_without_index(self):
        stmt = parse_one("point X = intersect(l, c)")
        assert isinstance(stmt, IntersectDecl)
        assert stmt.index is None and stmt.where is None

    def test_circle_with_transferred_radius(self):
        stmt = parse_one("circle d = center E radius dist(O, E)")
        assert stmt == CircleRadiusDecl("d", "E", "O", "E")

    def test_measure_with_target(self):
        stmt = parse_one("measure angle m = angle(E, O, E) target golden_angle")
        assert stmt == MeasureDecl("angle", "m", ("E", "O", "E"), "golden_angle")

    def test_measure_length_without_target(self):
        stmt = parse_one("measure length s = dist(O, E)")
        assert stmt == MeasureDecl("length", "s", ("O", "E"), None)

    def test_mark(self):
        stmt = parse_one("mark g = arc(O, E, golden_alpha)")
        assert stmt == MarkArcDecl("g", "O", "E", "golden_alpha")

    def test_comments_and_blank_lines_are_ignored(self):
        program = parse("# c\n\npoint O = (0, 0)  # origin\n\n")
        assert program.declared() == ("O",)

    def test_parse_file(self, tmp_path: Path):
        p = tmp_path / "t.euclid"
        p.write_text("point O = (0, 0)\n", encoding="utf-8")
        program = parse_file(p)
        assert program.file == str(p)
        assert DefaultScriptParser().parse_file(p) == program


# Tests: expressions


class TestExpressions:
    def test_product_binds_tighter_than_sum(self):
        assert let_expr("1 + 2 * 3") == BinaryAst("+", IntAst(1), BinaryAst("*", IntAst(2), IntAst(3)))

    def test_sums_are_left_associative(self):
        assert let_expr("1 - 2 - 3") == BinaryAst("-", BinaryAst("-", IntAst(1), IntAst(2)), IntAst(3))

    def test_power_binds_tighter_than_unary_minus(self):
        assert let_expr("-phi^2") == NegAst(PowAst(PhiAst(), 2))

    def test_parentheses_and_sqrt(self):
        assert let_expr("sqrt((1 + 2) / 3)") == SqrtAst(
            BinaryAst("/", BinaryAst("+", IntAst(1), IntAst(2)), IntAst(3))
        )

    def test_names_refer_to_scalars(self):
        program = parse("let a = 2\nlet b = a * a")
        assert program.statements[1].expr == BinaryAst("*", NameAst("a"), NameAst("a"))


# Tests: errors


class TestParseErrors:
    def test_missing_comma_is_located(self):
        text = "point O = (0, 0)\npoint E = (1, 0)\npoint P = (1 2)\n"
        with pytest.raises(EuclidSyntaxError) as exc:
            parse(text, filename="file.euclid")
        assert str(exc.value) == "file.euclid:3:14: expected ','"
        assert exc.value.details == {"found": "'2'"}

    def test_unknown_statement_lists_keywords(self):
        with pytest.raises(EuclidSyntaxError) as exc:
            parse("draw O")
        assert exc.value.message.startswith("expected 'point' or 'line'")

    def test_trailing_tokens_need_end_of_line(self):
        with pytest.raises(EuclidSyntaxError, match="expected end of line"):
            parse("point O = (0, 0) (1, 1)")

    def test_duplicate_identifier(self):
        with pytest.raises(DuplicateIdentifier) as exc:
            parse("point O = (0, 0)\nlet O = 1", filename="s.euclid")
        assert str(exc.value) == "s.euclid:2:5: identifier 'O' is already declared"

    def test_use_before_declaration(self):
        with pytest.raises(UseBeforeDeclaration) as exc:
            parse("line l = O E")
        assert exc.value.name == "O"

    def test_self_reference_is_use_before_declaration(self):
        with pytest.raises(UseBeforeDeclaration):
            parse("let a = a + 1")

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch) as exc:
            parse_one("line m = c E")
        assert exc.value.message == "'c' is a circle, expected a point"

    def test_scalar_expression_rejects_points(self):
        with pytest.raises(KindMismatch):
            parse_one("let k = O + 1")

    def test_unknown_target(self):
        with pytest.raises(UnknownTarget):
            parse_one("measure angle m = angle(E, O, E) target silver_angle")

    def test_target_kind_must_match_measurement(self):
        with pytest.raises(KindMismatch):
            parse_one("measure length s = dist(O, E) target golden_angle")

    @pytest.mark.parametrize(
        "line",
        [
            "point X = intersect(c, l)[2]",
            "point X = intersect(c, l) where z > 0",
            "point X = intersect(c, l) where y >= 0",
            "point X = intersect(c, l) where y > 1",
            "let k = phi ^ phi",
            "circle d = center O",
        ],
    )
    def test_malformed_statements(self, line):
        with pytest.raises(EuclidSyntaxError):
            parse_one(line)
