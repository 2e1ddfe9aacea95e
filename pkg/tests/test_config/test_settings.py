"""
Tests for application settings and the per-run configuration.
"""
from pathlib import Path

import pytest
import yaml

from formale.config.run import Command, OutputFormat, RunConfig
from formale.config.settings import AppSettings, get_config, reset_config
from formale.curves.weierstrass import WeierstrassCurve
from formale.utils.exceptions import ConfigurationError, ValidationError


class TestAppSettings:
    """Tests for AppSettings."""

    def test_defaults(self) -> None:
        """Test the default values."""
        settings = AppSettings()
        assert settings.default_order == 32
        assert settings.associativity_degree_cap == 8
        assert settings.default_p_max == 50
        assert settings.workers == 1
        assert settings.cache_path is None

    @pytest.mark.parametrize("field,value", [
        ("default_order", 3),
        ("associativity_degree_cap", 0),
        ("default_p_max", 1),
        ("workers", 0),
    ])
    def test_invalid_values(self, field: str, value: int) -> None:
        """Test that out of range values are rejected at construction."""
        with pytest.raises(ConfigurationError):
            AppSettings(**{field: value})

    def test_save_and_load(self, tmp_path: Path) -> None:
        """Test a YAML round trip."""
        path = tmp_path / "formale.yaml"
        AppSettings(default_order=64, workers=4, cache_path=tmp_path / "traces.json").save_to_file(path)

        with open(path) as f:
            raw = yaml.safe_load(f)
        assert raw["default_order"] == 64
        assert raw["cache_path"] == str(tmp_path / "traces.json")

        loaded = AppSettings()
        loaded.load_from_file(path)
        assert loaded.to_dict() == AppSettings(
            default_order=64, workers=4, cache_path=tmp_path / "traces.json"
        ).to_dict()

    def test_load_partial_file(self, tmp_path: Path) -> None:
        """Test that keys absent from the file keep their values."""
        path = tmp_path / "formale.yaml"
        path.write_text("default_p_max: 200\n")
        settings = AppSettings(workers=3)
        settings.load_from_file(path)
        assert settings.default_p_max == 200
        assert settings.workers == 3

    def test_load_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing file changes nothing."""
        settings = AppSettings()
        settings.load_from_file(tmp_path / "absent.yaml")
        assert settings.to_dict() == AppSettings().to_dict()

    @pytest.mark.parametrize("content", [
        "default_order: [unclosed\n",
        "- just\n- a list\n",
        "default_order: many\n",
        "default_order: 2\n",
    ])
    def test_load_invalid_file(self, tmp_path: Path, content: str) -> None:
        """Test that broken files raise ConfigurationError."""
        path = tmp_path / "formale.yaml"
        path.write_text(content)
        with pytest.raises(ConfigurationError):
            AppSettings().load_from_file(path)

    def test_from_env(self, monkeypatch, tmp_path: Path) -> None:
        """Test reading the FORMALE_* variables."""
        monkeypatch.setenv("FORMALE_CACHE", str(tmp_path / "traces.json"))
        monkeypatch.setenv("FORMALE_ORDER", "48")
        monkeypatch.setenv("FORMALE_WORKERS", "2")
        monkeypatch.setenv("FORMALE_ASSOC_CAP", "5")
        settings = AppSettings.from_env()
        assert settings.cache_path == tmp_path / "traces.json"
        assert settings.default_order == 48
        assert settings.workers == 2
        assert settings.associativity_degree_cap == 5

    @pytest.mark.parametrize("name,value", [
        ("FORMALE_ORDER", "lots"),
        ("FORMALE_WORKERS", "0"),
    ])
    def test_from_env_invalid(self, monkeypatch, name: str, value: str) -> None:
        """Test that bad environment values raise ConfigurationError."""
        monkeypatch.setenv(name, value)
        with pytest.raises(ConfigurationError):
            AppSettings.from_env()


def test_get_config_is_shared(monkeypatch) -> None:
    """Test the global settings instance."""
    monkeypatch.setenv("FORMALE_ORDER", "40")
    first = get_config()
    assert first is get_config()
    assert first.default_order == 40

    monkeypatch.setenv("FORMALE_ORDER", "44")
    assert get_config().default_order == 40
    reset_config()
    assert get_config().default_order == 44


class TestRunConfig:
    """Tests for RunConfig."""

    def test_json_flag(self) -> None:
        """Test the output format helper."""
        config = RunConfig(Command.POINTS, curve=WeierstrassCurve(0, 0, 0, 1, 0), output=OutputFormat.JSON)
        assert config.json
        assert not RunConfig(Command.POINTS).json

    @pytest.mark.parametrize("kwargs", [
        {"order": 3},
        {"p": 0},
        {"p_max": -1},
        {"n_max": 0},
        {"s_max": 0},
        {"workers": 0},
    ])
    def test_invalid_bounds(self, kwargs) -> None:
        """Test that nonsensical bounds are rejected."""
        with pytest.raises(ValidationError):
            RunConfig(Command.CHECK, **kwargs)

    def test_command_names(self) -> None:
        """Test the command values used in JSON envelopes."""
        assert [c.value for c in Command] == ["expand", "check", "points", "lseries", "group-law"]
