"""Initialize configuration from test resources."""
import os
from pathlib import Path
import contactgrad

__TEST_RESOURCES_PATH = Path(os.path.dirname(__file__)).joinpath('resources')
__CONFIG_PATH = __TEST_RESOURCES_PATH.joinpath('config.yaml')

contactgrad.config.init_config(config_path=__CONFIG_PATH, force_refresh=True)
