from gnomon.cli._errors import InvalidViewport
from gnomon.cli._io import read_script, write_diagnostics, write_output
from gnomon.cli.exitcodes import EXIT_ENGINE_ERROR, EXIT_OK
from gnomon.core.config import Settings
from gnomon.lang import LangError, format_diagnostics, interpret, parse
from gnomon.render import build_scene, render_svg


def render(*, path: str, out: str | None, size: int, settings: Settings) -> int:
    """Write a standalone SVG of the construction (stdout when ``out`` is None)."""
    if size <= 0:
        raise InvalidViewport(size)

    name, text = read_script(path)
    try:
        model = interpret(parse(text, filename=name), digits=settings.default_digits, settings=settings)
    except LangError as e:
        write_diagnostics(format_diagnostics([e]))
        return EXIT_ENGINE_ERROR

    scene = build_scene(model, settings.render, settings.precision)
    write_output(render_svg(scene, size), out)
    return EXIT_OK
