from gnomon.cli.main import main

__all__ = ("main",)
