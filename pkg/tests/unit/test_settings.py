import json

import pytest

from src.cli.settings import RunSettings, db_to_linear, load_file, parse_key_values
from src.config import config
from src.exceptions import ConfigError, MalformedValueError, MissingKeyError


def test_parse_key_values_skips_comments():
    """Test comment and blank-line handling."""
    raw = parse_key_values(["# comment", "", "p_a = 1.5", "trials=10"])
    assert raw == {"p_a": "1.5", "trials": "10"}


def test_parse_key_values_rejects_bare_words():
    """Test a line without '=' names its source and line number."""
    with pytest.raises(MalformedValueError) as excinfo:
        parse_key_values(["p_a=1", "oops"], source="run.cfg")
    assert excinfo.value.key == "run.cfg:2"


def test_resolve_from_file_and_overrides(run_config):
    """Test that --set values win over the file."""
    path = run_config(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.8)
    settings = RunSettings.resolve(path, ["p_j=0.5", "seed=3"])
    assert settings.get("p_a") == 1.0
    assert settings.get("p_j") == 0.5
    assert settings.get("seed") == 3
    assert isinstance(settings.get("seed"), int)


def test_resolve_from_json(tmp_path):
    """Test JSON run configurations."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"epsilon": 0.2, "p_m": 1}), encoding="utf-8")
    settings = RunSettings.resolve(path)
    assert settings.require("epsilon", "p_m") == (0.2, 1.0)


def test_db_keys_are_converted():
    """Test that '_db' keys land in linear units."""
    settings = RunSettings.resolve(None, ["p_m_db=10", "sigma_b2_db=0"])
    assert settings.get("p_m") == pytest.approx(10.0)
    assert settings.sigma_b2 == pytest.approx(1.0)
    assert db_to_linear(20.0) == pytest.approx(100.0)


@pytest.mark.parametrize(
    "override",
    ["p_a=abc", "p_a=nan", "trials=1.5", "unknown=1", "gamma_db=3", "pm_over_sigma=10"],
)
def test_malformed_values(override):
    """Test unparseable, NaN, non-integer and unknown keys."""
    with pytest.raises(MalformedValueError):
        RunSettings.resolve(None, [override])


def test_missing_file():
    """Test a missing config file is a configuration error."""
    with pytest.raises(ConfigError, match="not found"):
        load_file("does/not/exist.cfg")


def test_invalid_json(tmp_path):
    """Test a broken JSON document."""
    path = tmp_path / "run.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError, match="Invalid JSON"):
        load_file(path)


def test_require_reports_missing_key():
    """Test MissingKeyError names the key."""
    settings = RunSettings.resolve(None, ["p_a=1"])
    with pytest.raises(MissingKeyError) as excinfo:
        settings.require("p_a", "p_max")
    assert excinfo.value.key == "p_max"


def test_system_params_defaults():
    """Test noise variances fall back to the configured defaults."""
    settings = RunSettings.resolve(None, ["p_a=1", "p_min=2", "p_max=5", "p_j=0.8"])
    params = settings.system_params("p_a", "p_min", "p_max", "p_j")
    assert params.sigma_w2 == config.DEFAULT_SIGMA_W2
    assert params.sigma_b2 == config.DEFAULT_SIGMA_B2
    assert params.p_max == 5.0


def test_sim_config_from_settings():
    """Test simulation keys reach SimConfig."""
    cfg = RunSettings.resolve(None, ["trials=100", "symbols_per_slot=10", "seed=5"]).sim_config()
    assert (cfg.trials, cfg.symbols_per_slot, cfg.seed) == (100, 10, 5)
    assert cfg.block_size == config.SIM_BLOCK_SIZE


def test_resolved_header_includes_noise_defaults():
    """Test the output header lists everything that shaped the run."""
    header = RunSettings.resolve(None, ["epsilon=0.2"]).resolved({"axis": "epsilon"})
    assert header["epsilon"] == 0.2
    assert header["sigma_b2"] == config.DEFAULT_SIGMA_B2
    assert header["axis"] == "epsilon"
