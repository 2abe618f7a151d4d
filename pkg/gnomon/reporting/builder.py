from gnomon.lang import InterpretedModel
from gnomon.reporting.types import RunReport


def report_from_model(program: str, model: InterpretedModel) -> RunReport:
    return RunReport(
        program=program,
        measurements=model.measurements,
        assertions=model.assertions,
    )


def error_report(program: str, diagnostics: str) -> RunReport:
    """Report for a script that failed to parse or execute; one error per diagnostic line."""
    return RunReport(program=program, errors=tuple(diagnostics.splitlines()))
