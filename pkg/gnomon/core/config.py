from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

DEFAULT_CONFIG_FILE = "gnomon.yaml"


@dataclass(frozen=True, slots=True)
class ConfigError(Exception):
    code: str
    message: str
    details: Mapping[str, Any] | None = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True, slots=True)
class PrecisionSettings:
    """
    Working-precision schedule for interval evaluation.

    Sign determination and decimal certification start at ``start_bits`` and
    double until they succeed; passing ``max_bits`` is an internal invariant error.
    """

    start_bits: int = 64
    max_bits: int = 1 << 16


@dataclass(frozen=True, slots=True)
class RenderSettings:
    size: int = 480
    digits: int = 12


@dataclass(frozen=True, slots=True)
class Settings:
    precision: PrecisionSettings = field(default_factory=PrecisionSettings)
    render: RenderSettings = field(default_factory=RenderSettings)
    default_digits: int = 2


DEFAULT_SETTINGS = Settings()


def load_settings(path: str | Path | None = None, *, cwd: str | Path | None = None) -> Settings:
    """
    Load settings from a YAML file.

    Lookup order: explicit ``path``, then ``gnomon.yaml`` in ``cwd`` (or the
    process working directory), then built-in defaults.
    """
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise ConfigError(code="config_not_found", message=f"Config file does not exist: {p}")
    else:
        p = Path(cwd or ".") / DEFAULT_CONFIG_FILE
        if not p.exists():
            return DEFAULT_SETTINGS

    data = _read_yaml(p)
    if data is None:
        return DEFAULT_SETTINGS
    if not isinstance(data, Mapping):
        raise ConfigError(code="invalid_config", message="Config root must be a mapping.", details={"path": str(p)})

    _reject_unknown(data, {"precision", "render", "default_digits"}, where="<root>")

    settings = DEFAULT_SETTINGS
    if "precision" in data:
        settings = replace(settings, precision=_parse_precision(data["precision"]))
    if "render" in data:
        settings = replace(settings, render=_parse_render(data["render"]))
    if "default_digits" in data:
        settings = replace(settings, default_digits=_positive_int(data["default_digits"], "default_digits", minimum=0))
    return settings


def _read_yaml(path: Path) -> Any:
    try:
        import yaml
    except ImportError as e:
        raise ConfigError(
            code="yaml_dependency_missing",
            message="Reading gnomon.yaml requires PyYAML.",
            details={"hint": "pip install pyyaml", "path": str(path)},
        ) from e

    try:
        return yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ConfigError(code="invalid_yaml", message=f"Invalid YAML in {path}: {e}") from e


def _parse_precision(raw: Any) -> PrecisionSettings:
    if not isinstance(raw, Mapping):
        raise ConfigError(code="invalid_config", message="'precision' must be a mapping.")
    _reject_unknown(raw, {"start_bits", "max_bits"}, where="precision")

    start = _positive_int(raw.get("start_bits", 64), "precision.start_bits", minimum=8)
    ceiling = _positive_int(raw.get("max_bits", 1 << 16), "precision.max_bits", minimum=8)
    if ceiling < start:
        raise ConfigError(
            code="invalid_config",
            message="'precision.max_bits' must not be smaller than 'precision.start_bits'.",
            details={"start_bits": start, "max_bits": ceiling},
        )
    return PrecisionSettings(start_bits=start, max_bits=ceiling)


def _parse_render(raw: Any) -> RenderSettings:
    if not isinstance(raw, Mapping):
        raise ConfigError(code="invalid_config", message="'render' must be a mapping.")
    _reject_unknown(raw, {"size", "digits"}, where="render")
    return RenderSettings(
        size=_positive_int(raw.get("size", 480), "render.size", minimum=1),
        digits=_positive_int(raw.get("digits", 12), "render.digits", minimum=1),
    )


def _positive_int(value: Any, key: str, *, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(code="invalid_config", message=f"'{key}' must be an integer >= {minimum}.")
    return value


def _reject_unknown(raw: Mapping[str, Any], allowed: set[str], *, where: str) -> None:
    unknown = sorted(str(k) for k in raw.keys() if k not in allowed)
    if unknown:
        raise ConfigError(
            code="unknown_config_keys",
            message=f"Unknown keys in {where}: {', '.join(unknown)}",
            details={"allowed": sorted(allowed)},
        )
