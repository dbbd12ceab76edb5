import pytest

from composition_runs.config import Settings, load_settings, read_config_file, settings_from_env
from composition_runs.errors import ConfigError


def test_defaults():
    s = Settings()
    assert (s.precision, s.enumeration_cap, s.series_cap, s.fourier_terms) == (50, 24, 4096, 16)


def test_environment():
    s = settings_from_env({"COMPOSITION_RUNS_PRECISION": "60", "COMPOSITION_RUNS_SERIES_CAP": "100"})
    assert s.precision == 60
    assert s.series_cap == 100
    assert s.enumeration_cap == 24


def test_bad_environment_value():
    with pytest.raises(ConfigError):
        settings_from_env({"COMPOSITION_RUNS_ENUM_CAP": "many"})


def test_config_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("precision: 70\nseries-cap: 2048\nn: 12\n")
    assert read_config_file(path) == {"precision": 70, "series_cap": 2048, "n": 12}


def test_resolution_order(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("precision: 70\nfourier_terms: 8\n")
    s = load_settings(path, {"precision": 80}, {"COMPOSITION_RUNS_PRECISION": "60"})
    assert s.precision == 80
    assert s.fourier_terms == 8


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        read_config_file(tmp_path / "absent.yaml")


def test_top_level_must_be_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        read_config_file(path)


@pytest.mark.parametrize("field, value", [("precision", 5), ("series_cap", 0), ("tolerance", 2.0)])
def test_invalid_settings(field, value):
    with pytest.raises(ConfigError):
        Settings(**{field: value})
