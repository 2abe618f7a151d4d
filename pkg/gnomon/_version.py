from importlib.metadata import PackageNotFoundError, version


def _detect_version() -> str:
    """
    Detect the installed gnomon version.

    Falls back to a development placeholder when package metadata
    is not available (e.g. running from a source checkout).
    """
    try:
        return version("gnomon")
    except PackageNotFoundError:
        return "0.0.0-dev"
