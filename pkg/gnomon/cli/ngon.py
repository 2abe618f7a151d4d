import re

from gnomon.cli._errors import CliError
from gnomon.cli.exitcodes import EXIT_OK
from gnomon.oracle import ConstructibilityVerdict, angle_constructible, golden_angle_verdict, ngon_constructible
from gnomon.reporting import dumps_deterministic

_RATIO = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")


def verdict_for(subject: str) -> ConstructibilityVerdict:
    """``golden``, an integer N (regular N-gon) or ``P/Q`` (the angle 2π·P/Q)."""
    text = subject.strip()
    if text.lower() == "golden":
        return golden_angle_verdict()
    if text.isdigit():
        return ngon_constructible(int(text))
    m = _RATIO.match(text)
    if m:
        return angle_constructible(int(m.group(1)), int(m.group(2)))
    raise CliError(f"malformed subject {subject!r}: expected 'golden', N or P/Q")


def ngon(*, subject: str, fmt: str) -> int:
    verdict = verdict_for(subject)
    if fmt == "json":
        print(dumps_deterministic(verdict.to_dict()))
    else:
        print(verdict.describe())
    return EXIT_OK
