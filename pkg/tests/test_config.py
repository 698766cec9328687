"""Configuration loading."""

import yaml

from dicodim.config.loader import get_config_path, load_config, save_config
from dicodim.config.schema import Config, LimitsConfig


def test_defaults():
    config = load_config()
    assert config.limits == LimitsConfig()
    assert config.limits.max_free_dim == 30240
    assert config.output.format == "table"
    assert config.defaults.p0_degree == 3


def test_file_values(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.dump({"limits": {"max_rows": 10}, "output": {"format": "csv"}}))
    config = load_config(path)
    assert config.limits.max_rows == 10
    assert config.limits.max_free_dim == 30240
    assert config.output.format == "csv"


def test_environment_beats_file(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.dump({"limits": {"max_rows": 10, "max_free_dim": 50}}))
    monkeypatch.setenv("DICODIM_LIMITS__MAX_FREE_DIM", "100")
    config = load_config(path)
    assert config.limits.max_free_dim == 100
    assert config.limits.max_rows == 10


def test_broken_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("limits: [unclosed\n")
    assert load_config(path) == Config()


def test_save_round_trip(isolated_home):
    config = Config()
    config.zoo.extra_dirs = ["~/my-zoo"]
    save_config(config)
    assert get_config_path() == isolated_home / ".dicodim" / "config.yaml"
    assert load_config().zoo.extra_dirs == ["~/my-zoo"]
