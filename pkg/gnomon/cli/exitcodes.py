from collections.abc import Mapping
from typing import Any

# CI-friendly semantics
EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_ENGINE_ERROR = 2


def exit_code_from_report_dict(report: Mapping[str, Any]) -> int:
    """
    Determine exit code from a dict-shaped report (RunReport.to_dict()).
    Policy:
      - status "error" (parse or runtime error) => EXIT_ENGINE_ERROR
      - status "failed" (an exact assertion or check failed) => EXIT_ASSERTION_FAILED
      - else EXIT_OK
    """
    status = report.get("status")
    if status == "error":
        return EXIT_ENGINE_ERROR
    if status == "failed":
        return EXIT_ASSERTION_FAILED
    if status == "ok":
        return EXIT_OK
    return EXIT_ENGINE_ERROR
