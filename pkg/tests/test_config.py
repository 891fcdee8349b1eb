from pathlib import Path
import tempfile

import pytest

import contactgrad
from contactgrad.core.config import BUNDLED_DATA_DIR, DATA_ENV_VAR, Configuration


# Configuration initialized in `tests/__init__.py`
def test_config_init():
    config = contactgrad.config.CONFIG
    assert config.max_split_dim == 52, "Configuration should match yaml file contents"
    assert config.max_nonsplit_dim == 36, "Configuration should match yaml file contents"
    assert config.jacobi_exhaustive_max_dim == 15, "Configuration should match yaml file contents"
    assert config.max_rank == 8, "Configuration should match yaml file contents"
    assert config.data_dir == BUNDLED_DATA_DIR, "A null data dir should fall back to the bundled datasets"


def test_config_defaults_from_empty_dict():
    config = Configuration.from_dict({})
    assert config.jobs == Configuration.DEF_JOBS
    assert config.max_split_dim == 248, "Default caps should reach e8"
    assert config.max_nonsplit_dim == Configuration.DEF_MAX_NONSPLIT_DIM
    assert config.jacobi_seed == Configuration.DEF_JACOBI_SEED


def test_config_partial_sections():
    config = Configuration.from_dict({"verification": {"jobs": 4, "jacobi": {"samples": 10}}})
    assert config.jobs == 4
    assert config.jacobi_samples == 10
    assert config.jacobi_exhaustive_max_dim == Configuration.DEF_JACOBI_EXHAUSTIVE_MAX_DIM, \
        "Keys missing from a section should keep their defaults"


def test_config_from_missing_yaml():
    with tempfile.TemporaryDirectory() as temp_dir:
        with pytest.raises(FileNotFoundError):
            Configuration.from_yaml(Path(temp_dir).joinpath("config.yaml"))


def test_config_from_yaml_file():
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir).joinpath("config.yaml")
        path.write_text("data:\n  dir: {dir}\nsatake:\n  max_rank: 4\n".format(dir=temp_dir))
        config = Configuration.from_yaml(path)
    assert config.max_rank == 4
    assert config.data_dir == Path(temp_dir)


def test_data_dir_environment_override(monkeypatch):
    config = Configuration.from_dict({})
    monkeypatch.setenv(DATA_ENV_VAR, "/some/where")
    assert config.data_dir == Path("/some/where"), "The environment variable should win over the configuration"
    monkeypatch.delenv(DATA_ENV_VAR)
    assert config.data_dir == BUNDLED_DATA_DIR


def test_use_config_replaces_and_restores():
    original = contactgrad.config.get_config()
    replacement = Configuration.from_dict({"satake": {"max_rank": 3}})
    try:
        assert contactgrad.config.use_config(replacement) is replacement
        assert contactgrad.config.get_config().max_rank == 3
    finally:
        contactgrad.config.use_config(original)
    assert contactgrad.config.get_config() is original
