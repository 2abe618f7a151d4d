from collections.abc import Iterable

from gnomon.lang.errors import LangError


def format_diagnostics(errors: Iterable[LangError]) -> str:
    """One ``file:line:col: message`` line per error, ordered by location."""
    ordered = sorted(errors, key=lambda e: e.sort_key())
    return "".join(f"{e}\n" for e in ordered)
