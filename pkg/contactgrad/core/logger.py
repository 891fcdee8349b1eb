"""Logging setup from logging.yaml: rotating files under LOGS_DIR plus a WARNING console on stderr."""
import logging
import logging.config
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .config import LOG_CONFIG_FILE, LOGS_DIR, ensure_base_dirs

LOGGER = logging.getLogger(__name__)

WORKER_LOGS = "*.worker-*.log*"

# Do not expose anything by default (internal module)
__all__ = []  # type: List[str]


def read_log_config(log_config: Path = LOG_CONFIG_FILE) -> Dict[str, Any]:
    if not log_config.is_file():
        raise RuntimeError("Logging file {log_file} not found".format(log_file=log_config))
    with log_config.open() as log_file:
        return yaml.safe_load(log_file.read())


def route_log_files(config: Dict[str, Any], logs_dir: Path = LOGS_DIR, worker: Optional[int] = None) -> Dict[str, Any]:
    """
    Points every file handler of `config` into `logs_dir`. Worker processes get their own files
    ("debug.log" -> "debug.worker-<pid>.log") as rotating handlers cannot be shared between processes.
    """
    for handler_config in config['handlers'].values():
        if 'filename' not in handler_config:
            continue
        filename = Path(handler_config['filename'])
        if worker is not None:
            filename = Path("{stem}.worker-{pid}{suffix}".format(stem=filename.stem, pid=worker,
                                                                  suffix=filename.suffix))
        handler_config['filename'] = str(logs_dir.joinpath(filename.name))
    return config


def prune_worker_logs(logs_dir: Path = LOGS_DIR) -> int:
    """Deletes the files left by table workers of earlier runs, rotated backups included."""
    if not logs_dir.is_dir():
        return 0
    removed = 0
    for path in logs_dir.glob(WORKER_LOGS):
        path.unlink()
        removed += 1
    return removed


def setup_logging(log_config: Path = LOG_CONFIG_FILE, silent: bool = False):
    """Setup logging configuration
    This MUST be called before creating any loggers.
    """
    config = route_log_files(read_log_config(log_config))
    removed = prune_worker_logs()
    logging.config.dictConfig(config)
    if silent:
        remove_non_file_handlers()
    LOGGER.debug("Removed %d stale worker log files", removed)


def setup_worker_logging(log_config: Path = LOG_CONFIG_FILE):
    """File-only logging for a spawned table worker; the parent owns the console."""
    ensure_base_dirs(verbose=False)
    logging.config.dictConfig(route_log_files(read_log_config(log_config), worker=os.getpid()))
    remove_non_file_handlers()
    LOGGER.debug("Worker %d logging to %s", os.getpid(), LOGS_DIR)


def remove_non_file_handlers():
    log = logging.getLogger()  # Root logger
    for handler in log.handlers.copy():
        if not isinstance(handler, logging.FileHandler):
            log.handlers.remove(handler)
    LOGGER.info("Deleted non-file handlers from logging")
