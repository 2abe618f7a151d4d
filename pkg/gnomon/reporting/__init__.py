from gnomon.reporting._json import dumps_deterministic, to_jsonable
from gnomon.reporting.builder import error_report, report_from_model
from gnomon.reporting.types import Fact, RunReport, RunStatus

__all__ = [
    "RunReport",
    "RunStatus",
    "Fact",
    "report_from_model",
    "error_report",
    "dumps_deterministic",
    "to_jsonable",
]
