from pathlib import Path

import pytest

from contactgrad.core.logger import prune_worker_logs, read_log_config, route_log_files, setup_logging


def test_missing_log_config():
    with pytest.raises(RuntimeError):
        setup_logging(Path("/nonexistent/logging.yaml"))


def test_bundled_log_config():
    config = read_log_config()
    assert config['handlers']['console']['level'] == "WARNING"
    assert config['loggers']['sympy']['level'] == "WARNING"


def test_log_files_are_routed(tmp_path):
    config = route_log_files(read_log_config(), tmp_path)
    assert config['handlers']['debug_file_handler']['filename'] == str(tmp_path.joinpath("debug.log"))
    assert 'filename' not in config['handlers']['console']


def test_worker_log_files(tmp_path):
    config = route_log_files(read_log_config(), tmp_path, worker=42)
    assert config['handlers']['error_file_handler']['filename'] == str(tmp_path.joinpath("errors.worker-42.log"))


def test_stale_worker_logs_are_pruned(tmp_path):
    for name in ("debug.log", "info.log.3", "debug.worker-17.log", "errors.worker-4.log.1"):
        tmp_path.joinpath(name).write_text("")
    assert prune_worker_logs(tmp_path) == 2
    assert sorted(path.name for path in tmp_path.iterdir()) == ["debug.log", "info.log.3"]
    assert prune_worker_logs(tmp_path.joinpath("missing")) == 0
