from gnomon.reporting._json import dumps_deterministic
from gnomon.reporting.types import RunReport


class JsonReportRenderer:
    """
    Machine-readable JSON output for CI acceptance checks.
    """

    def render(self, report: RunReport) -> str:
        return dumps_deterministic(report.to_dict()) + "\n"
