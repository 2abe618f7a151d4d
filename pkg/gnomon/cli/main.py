import argparse
import logging
import sys

from gnomon import GNOMON_VERSION
from gnomon.cli import corpus, ngon, render, run, verify
from gnomon.cli.exitcodes import EXIT_ENGINE_ERROR
from gnomon.core.config import load_settings

_LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: '{text}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gnomon",
        description="gnomon: exact straightedge-and-compass constructions and golden-angle verification",
    )
    p.add_argument("--version", action="version", version=f"gnomon {GNOMON_VERSION}")
    p.add_argument("--config", default=None, help="Settings file (default: ./gnomon.yaml if present).")
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Minimal output (summary only).")
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Verbose output and debug logging.")

    sub = p.add_subparsers(dest="cmd", required=True)

    # run
    run_p = sub.add_parser("run", help="Interpret a construction script.")
    run_p.add_argument("path", help="Script path or shipped corpus name.")
    run_p.add_argument(
        "--digits", type=_non_negative_int, default=None, help="Decimal places for measurements (default: 2)."
    )
    run_p.add_argument("--json", action="store_true", help="Emit a JSON report.")

    # verify-golden
    verify_p = sub.add_parser("verify-golden", help="Reproduce the golden-angle approximation numbers.")
    verify_p.add_argument("--digits", type=_non_negative_int, default=None, help="Decimal places (default: 2).")
    verify_p.add_argument("--json", action="store_true", help="Emit a JSON report.")

    # ngon
    ngon_p = sub.add_parser("ngon", help="Constructibility of a regular polygon or angle.")
    ngon_p.add_argument("subject", help="'golden', N (regular N-gon) or P/Q (the angle 2π·P/Q).")
    ngon_p.add_argument("--json", action="store_true", help="Emit the verdict as JSON.")

    # render
    render_p = sub.add_parser("render", help="Render a construction script to SVG.")
    render_p.add_argument("path", help="Script path or shipped corpus name.")
    render_p.add_argument("--out", default=None, help="Output file (default: stdout).")
    render_p.add_argument("--size", type=int, default=None, help="Viewport size in pixels (default: 480).")

    # corpus
    sub.add_parser("corpus", help="List the shipped construction scripts.")

    return p


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("gnomon")
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    for h in logger.handlers:
        if getattr(h, "_gnomon_cli", False):
            # rebind: sys.stderr may have been replaced since the last call
            h.stream = sys.stderr  # type: ignore[attr-defined]
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    handler._gnomon_cli = True  # type: ignore[attr-defined]
    logger.addHandler(handler)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    verbosity = "quiet" if args.quiet else ("verbose" if args.verbose else "normal")

    try:
        settings = load_settings(args.config)
        fmt = "json" if getattr(args, "json", False) else "text"

        if args.cmd == "run":
            digits = settings.default_digits if args.digits is None else args.digits
            return run.run(path=args.path, digits=digits, fmt=fmt, verbosity=verbosity, settings=settings)

        if args.cmd == "verify-golden":
            digits = settings.default_digits if args.digits is None else args.digits
            return verify.verify_golden(digits=digits, fmt=fmt, verbosity=verbosity, settings=settings)

        if args.cmd == "ngon":
            return ngon.ngon(subject=args.subject, fmt=fmt)

        if args.cmd == "render":
            size = settings.render.size if args.size is None else args.size
            return render.render(path=args.path, out=args.out, size=size, settings=settings)

        if args.cmd == "corpus":
            return corpus.list_corpus()

        print("Unknown command.", file=sys.stderr)
        return EXIT_ENGINE_ERROR

    except Exception as e:
        print(f"gnomon: error: {e}", file=sys.stderr)
        return EXIT_ENGINE_ERROR
