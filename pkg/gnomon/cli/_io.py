import sys
from pathlib import Path

from gnomon import corpus


def read_script(path: str) -> tuple[str, str]:
    """``(display name, text)`` for a script path or a shipped corpus name."""
    return corpus.resolve(path)


def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")


def write_diagnostics(text: str) -> None:
    if text:
        sys.stderr.write(text)
