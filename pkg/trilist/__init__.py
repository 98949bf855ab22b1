from .config import Config
from .version import __version__

default_config = Config.default()
