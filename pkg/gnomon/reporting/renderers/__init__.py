from gnomon.reporting.renderers.json import JsonReportRenderer
from gnomon.reporting.renderers.text import TextReportRenderer, Verbosity

__all__ = ["JsonReportRenderer", "TextReportRenderer", "Verbosity"]
