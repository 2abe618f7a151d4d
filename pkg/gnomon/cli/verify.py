from fractions import Fraction

from gnomon.cli._io import write_diagnostics
from gnomon.cli.exitcodes import EXIT_ENGINE_ERROR, exit_code_from_report_dict
from gnomon.core.config import Settings
from gnomon.corpus import corpus_text
from gnomon.geometry import dist2
from gnomon.lang import InterpretedModel, LangError, format_diagnostics, interpret, parse
from gnomon.measure import pentagram_arc_closed_form, golden_constants
from gnomon.measure.golden import pentagon_side
from gnomon.reporting import Fact, RunReport, error_report
from gnomon.reporting.renderers import JsonReportRenderer, TextReportRenderer, Verbosity

PENTAGRAM = "pentagram_golden_angle"
CHORD_TOLERANCE = Fraction(1, 10**30)
CHORD_CHECK_BITS = 256


def golden_facts(model: InterpretedModel) -> tuple[Fact, ...]:
    """The three pentagon facts behind the construction, checked on the interpreted model."""
    a, b = model.scalar("a"), model.scalar("b")
    A, C = model.point("A"), model.point("C")

    ratio = (a - model.tower.phi() * b).is_zero()
    chord_ac = (dist2(A, C) - b * b).is_zero()

    gap = abs(a.approx(CHORD_CHECK_BITS) - pentagon_side(CHORD_CHECK_BITS))
    side = gap.to_fractions()[1] < CHORD_TOLERANCE

    return (
        Fact("golden_ratio", "a/b = φ (exact)", ratio),
        Fact("arc_chord", "|AC| = b (exact)", chord_ac),
        Fact("pentagon_side", "|a − chord(2π/5)| < 1e-30 (certified)", side),
    )


def verify_golden(*, digits: int, fmt: str, verbosity: Verbosity, settings: Settings) -> int:
    """
    Reproduce the golden-angle numbers: φ, the golden angle, the arc BC the
    pentagram construction yields, its closed form, and the errors between them.
    """
    name = f"{PENTAGRAM}.euclid"
    try:
        model = interpret(parse(corpus_text(PENTAGRAM), filename=name), digits=digits, settings=settings)
    except LangError as e:
        diagnostics = format_diagnostics([e])
        write_diagnostics(diagnostics)
        if fmt == "json":
            print(JsonReportRenderer().render(error_report(name, diagnostics)), end="")
        return EXIT_ENGINE_ERROR

    precision = settings.precision
    phi, golden_angle, _ = golden_constants(digits, precision=precision)
    closed_form = pentagram_arc_closed_form(digits, precision=precision)

    report = RunReport(
        program=name,
        measurements=(phi, golden_angle, model.measurement("arcBC"), closed_form),
        assertions=model.assertions,
        facts=golden_facts(model),
    )
    if fmt == "json":
        out = JsonReportRenderer().render(report)
    else:
        out = TextReportRenderer(verbosity=verbosity).render_golden(report)
    print(out, end="")
    return exit_code_from_report_dict(report.to_dict())
