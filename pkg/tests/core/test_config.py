from pathlib import Path

import pytest
from gnomon.core.config import (
    DEFAULT_SETTINGS,
    ConfigError,
    PrecisionSettings,
    RenderSettings,
    load_settings,
)


def write(tmp_path: Path, text: str, name: str = "gnomon.yaml") -> Path:
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def test_defaults_when_no_file(tmp_path):
    assert load_settings(cwd=tmp_path) == DEFAULT_SETTINGS
    assert DEFAULT_SETTINGS.precision == PrecisionSettings(start_bits=64, max_bits=65536)
    assert DEFAULT_SETTINGS.render == RenderSettings(size=480, digits=12)
    assert DEFAULT_SETTINGS.default_digits == 2


def test_reads_gnomon_yaml_from_cwd(tmp_path):
    write(tmp_path, "default_digits: 5\nrender:\n  size: 640\n")
    s = load_settings(cwd=tmp_path)
    assert s.default_digits == 5
    assert s.render.size == 640
    assert s.render.digits == 12


def test_explicit_path(tmp_path):
    p = write(tmp_path, "precision:\n  start_bits: 128\n  max_bits: 4096\n", name="custom.yaml")
    s = load_settings(p)
    assert s.precision == PrecisionSettings(start_bits=128, max_bits=4096)


def test_empty_file_gives_defaults(tmp_path):
    p = write(tmp_path, "")
    assert load_settings(p) == DEFAULT_SETTINGS


def test_missing_explicit_path_raises(tmp_path):
    with pytest.raises(ConfigError) as exc:
        load_settings(tmp_path / "nope.yaml")
    assert exc.value.code == "config_not_found"


@pytest.mark.parametrize(
    "text, code",
    [
        ("- a\n- b\n", "invalid_config"),
        ("colour: red\n", "unknown_config_keys"),
        ("precision:\n  start_bits: 4\n", "invalid_config"),
        ("precision:\n  start_bits: 256\n  max_bits: 128\n", "invalid_config"),
        ("render:\n  size: 0\n", "invalid_config"),
        ("default_digits: true\n", "invalid_config"),
        ("render: [1, 2\n", "invalid_yaml"),
    ],
)
def test_invalid_settings_are_rejected(tmp_path, text, code):
    p = write(tmp_path, text)
    with pytest.raises(ConfigError) as exc:
        load_settings(p)
    assert exc.value.code == code
