from gnomon.cli._io import read_script, write_diagnostics
from gnomon.cli.exitcodes import EXIT_ENGINE_ERROR, exit_code_from_report_dict
from gnomon.core.config import Settings
from gnomon.lang import LangError, format_diagnostics, interpret, parse
from gnomon.reporting import error_report, report_from_model
from gnomon.reporting.renderers import JsonReportRenderer, TextReportRenderer, Verbosity


def run(*, path: str, digits: int, fmt: str, verbosity: Verbosity, settings: Settings) -> int:
    """
    Interpret a construction script and report its measurements and assertions.

    Parse and runtime errors go to stderr as ``file:line:col: message``
    diagnostics (exit 2); failed assertions exit 1.
    """
    name, text = read_script(path)
    try:
        model = interpret(parse(text, filename=name), digits=digits, settings=settings)
    except LangError as e:
        diagnostics = format_diagnostics([e])
        write_diagnostics(diagnostics)
        if fmt == "json":
            print(JsonReportRenderer().render(error_report(name, diagnostics)), end="")
        return EXIT_ENGINE_ERROR

    report = report_from_model(name, model)
    if fmt == "json":
        out = JsonReportRenderer().render(report)
    else:
        out = TextReportRenderer(verbosity=verbosity).render(report)
    print(out, end="")

    write_diagnostics(format_diagnostics(model.failures()))
    return exit_code_from_report_dict(report.to_dict())
