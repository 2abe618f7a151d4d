"""Construction scripts shipped with the package."""

from importlib.resources import files
from pathlib import Path

SUFFIX = ".euclid"


def corpus_names() -> tuple[str, ...]:
    root = files(__name__)
    return tuple(sorted(p.name.removesuffix(SUFFIX) for p in root.iterdir() if p.name.endswith(SUFFIX)))


def corpus_text(name: str) -> str:
    return files(__name__).joinpath(_file_name(name)).read_text(encoding="utf-8")


def resolve(name_or_path: str) -> tuple[str, str]:
    """
    ``(display name, text)`` of a script given by path or by corpus name.

    An existing path wins; otherwise the name is looked up in the corpus
    (with or without the ``.euclid`` suffix).
    """
    p = Path(name_or_path)
    if p.is_file():
        return str(p), p.read_text(encoding="utf-8")
    stem = name_or_path.removesuffix(SUFFIX)
    if stem in corpus_names():
        return _file_name(stem), corpus_text(stem)
    raise FileNotFoundError(f"no such file or corpus entry: {name_or_path}")


def _file_name(name: str) -> str:
    return name if name.endswith(SUFFIX) else name + SUFFIX
