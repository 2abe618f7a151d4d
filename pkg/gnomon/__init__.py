from ._version import _detect_version

GNOMON_VERSION = _detect_version()

__all__ = ["GNOMON_VERSION"]
