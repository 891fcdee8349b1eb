import os
import logging
from pathlib import Path
from typing import Optional, List, Any, Dict

LOGGER = logging.getLogger(__name__)

PACKAGE_PATH = Path(os.path.dirname(__file__))  # type: Path

CONFIG_PATH = PACKAGE_PATH.joinpath('config.yaml')
LOG_CONFIG_FILE = PACKAGE_PATH.joinpath('logging.yaml')
BUNDLED_DATA_DIR = PACKAGE_PATH.parent.joinpath('data')

BASE_DIR = Path.home().joinpath('.contactgrad')
LOGS_DIR = BASE_DIR.joinpath('logs')

DATA_ENV_VAR = 'CONTACTGRAD_DATA'

CONFIG = None  # type: Optional[Configuration]


# Don't automatically expose anything to top level, as the entire module is loaded as-is
__all__ = []  # type: List[str]


del logging  # Clean-up (only leaves Path available in this module)
del List


def ensure_base_dirs(verbose=True):

    def create_dir_if_not_exist(path: Path):
        if not path.is_dir():
            # Print instead of logging as loggers may not have been configured yet
            if verbose:
                print("Creating directory {path}".format(path=path))
            path.mkdir()

    create_dir_if_not_exist(BASE_DIR)
    create_dir_if_not_exist(LOGS_DIR)


class Configuration:
    DEF_JOBS = 1
    DEF_JACOBI_EXHAUSTIVE_MAX_DIM = 66
    DEF_JACOBI_SAMPLES = 100000
    DEF_JACOBI_SEED = 1729
    DEF_MAX_SPLIT_DIM = 248
    DEF_MAX_NONSPLIT_DIM = 66
    DEF_MAX_RANK = 8

    def __init__(self, data_dir: Optional[Path] = None, jobs: int = DEF_JOBS,
                 jacobi_exhaustive_max_dim: int = DEF_JACOBI_EXHAUSTIVE_MAX_DIM,
                 jacobi_samples: int = DEF_JACOBI_SAMPLES, jacobi_seed: int = DEF_JACOBI_SEED,
                 max_split_dim: int = DEF_MAX_SPLIT_DIM, max_nonsplit_dim: int = DEF_MAX_NONSPLIT_DIM,
                 max_rank: int = DEF_MAX_RANK):
        self._data_dir = data_dir
        self.jobs = jobs
        self.jacobi_exhaustive_max_dim = jacobi_exhaustive_max_dim
        self.jacobi_samples = jacobi_samples
        self.jacobi_seed = jacobi_seed
        self.max_split_dim = max_split_dim
        self.max_nonsplit_dim = max_nonsplit_dim
        self.max_rank = max_rank

    @property
    def data_dir(self) -> Path:
        """Dataset directory; the CONTACTGRAD_DATA environment variable wins over the configured value."""
        env_dir = os.environ.get(DATA_ENV_VAR)
        if env_dir:
            return Path(env_dir)
        return self._data_dir or BUNDLED_DATA_DIR

    @staticmethod
    def from_yaml(path: Path = CONFIG_PATH):
        import yaml

        LOGGER.debug("Reading configuration from %s", path)
        if not path.is_file():
            raise FileNotFoundError("File {path} not found".format(path=path))
        with path.open('r') as file:
            config = yaml.safe_load(file.read()) or dict()  # type: Dict[str, Any]
        return Configuration.from_dict(config)

    @staticmethod
    def from_dict(config: Dict[str, Any]):
        data = config.get('data') or dict()
        verification = config.get('verification') or dict()
        jacobi = verification.get('jacobi') or dict()
        bracket_level = verification.get('bracket_level') or dict()
        satake = config.get('satake') or dict()
        data_dir = data.get('dir')
        return Configuration(data_dir=Path(data_dir) if data_dir else None,
                             jobs=verification.get('jobs', Configuration.DEF_JOBS),
                             jacobi_exhaustive_max_dim=jacobi.get('exhaustive_max_dim',
                                                                  Configuration.DEF_JACOBI_EXHAUSTIVE_MAX_DIM),
                             jacobi_samples=jacobi.get('samples', Configuration.DEF_JACOBI_SAMPLES),
                             jacobi_seed=jacobi.get('seed', Configuration.DEF_JACOBI_SEED),
                             max_split_dim=bracket_level.get('max_split_dim', Configuration.DEF_MAX_SPLIT_DIM),
                             max_nonsplit_dim=bracket_level.get('max_nonsplit_dim',
                                                                Configuration.DEF_MAX_NONSPLIT_DIM),
                             max_rank=satake.get('max_rank', Configuration.DEF_MAX_RANK))


def init_config(config_path: Path = CONFIG_PATH, force_refresh=False) -> Configuration:
    """Allows a one-time initialization of CONFIG."""
    global CONFIG  # pylint:disable=global-statement
    if CONFIG is None or force_refresh:
        CONFIG = Configuration.from_yaml(config_path)
    return CONFIG


def use_config(config: Configuration) -> Configuration:
    """Installs an existing configuration, e.g. the parent's one in a worker process."""
    global CONFIG  # pylint:disable=global-statement
    CONFIG = config
    return CONFIG


def get_config() -> Configuration:
    """Returns CONFIG, reading the bundled defaults if nothing was initialized yet."""
    return CONFIG if CONFIG is not None else init_config()


del Optional
