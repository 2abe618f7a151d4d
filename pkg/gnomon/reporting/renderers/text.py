from typing import Literal

from gnomon.measure import Measurement
from gnomon.reporting.types import RunReport, RunStatus

Verbosity = Literal["quiet", "normal", "verbose"]

# Display labels for the verify-golden measurements
GOLDEN_LABELS = {
    "phi": "phi",
    "golden_angle": "golden angle",
    "arcBC": "measured arc BC",
    "closed_form": "closed form",
}


class TextReportRenderer:
    """
    Human-readable CLI output. Pure rendering: does not sort or mutate.

    Verbosity levels:
    - quiet: one-line summary only
    - normal: summary + measurements + failed assertions
    - verbose: header, every assertion with its location
    """

    def __init__(self, verbosity: Verbosity = "normal"):
        self.verbosity = verbosity

    def render(self, report: RunReport) -> str:
        summary = self._summary(report)
        if self.verbosity == "quiet":
            return summary + "\n"

        lines: list[str] = []
        if self.verbosity == "verbose":
            lines.append(f"{report.tool} {report.version}")
            lines.append(f"program: {report.program}")
            lines.append("")
        lines.append(summary)
        lines.append("")

        for m in report.measurements:
            lines.extend(render_measurement(m))

        for a in report.assertions:
            if not a.passed:
                lines.append(f"✗ {a.location}: assertion failed: sign of difference = {a.sign:+d}")
            elif self.verbosity == "verbose":
                lines.append(f"✓ {a.location}")

        lines.extend(report.errors)
        return "\n".join(lines).rstrip() + "\n"

    def render_golden(self, report: RunReport) -> str:
        """verify-golden layout: one ``label = value`` line per quantity, then the exact checks."""
        lines: list[str] = []
        by_name = {m.name: m for m in report.measurements}
        for name, label in GOLDEN_LABELS.items():
            m = by_name.get(name)
            if m is not None:
                lines.append(f"{label} = {m.display}")
        measured = by_name.get("arcBC")
        if measured is not None and measured.abs_error_decimal is not None:
            lines.append(f"absolute error = {measured.abs_error_decimal} {measured.unit}".rstrip())
            lines.append(f"relative error = {measured.rel_error_percent}%")
        if self.verbosity == "quiet":
            lines = []
        for f in report.facts:
            lines.append(f"{'✓' if f.passed else '✗'} {f.statement}")
        lines.extend(report.errors)
        return "\n".join(lines) + "\n"

    def _summary(self, report: RunReport) -> str:
        status = report.status
        if status is RunStatus.ERROR:
            return f"✗ {len(report.errors)} errors"
        total = len(report.assertions)
        if status is RunStatus.FAILED:
            if not report.assertions_failed:
                failed = sum(1 for f in report.facts if not f.passed)
                return f"✗ {failed} of {len(report.facts)} checks failed"
            return f"✗ {report.assertions_failed} of {total} assertions failed"
        return f"✓ {total} assertions passed"


def render_measurement(m: Measurement) -> list[str]:
    lines = [f"{m.name} = {m.display}"]
    if m.target_decimal is not None:
        lines.append(f"  target {m.target_name} = {m.target_decimal} {m.unit}".rstrip())
        lines.append(f"  absolute error = {m.abs_error_decimal} {m.unit}".rstrip())
        lines.append(f"  relative error = {m.rel_error_percent}%")
    return lines
