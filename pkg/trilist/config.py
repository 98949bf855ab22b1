import os
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from trilist.models.exceptions import ConfigLoadError, ConfigFieldError


TRILIST_CONFIG_ENV = 'TRILIST_CONFIG'
TRILIST_CONFIG_NAME = 'trilist.cfg'
TRILIST_GUARD_ENV = 'TRILIST_GUARD_N'


def expand_env_var(env_var):
    """ Expand environment variables and '~' until the value stops changing.

    Args:
        env_var (str): A value that may reference environment variables, which may in
            turn reference others.

    Returns:
        str: The value with every reference replaced.
    """
    if not env_var:
        return env_var
    value = str(env_var)
    while True:
        expanded = os.path.expanduser(os.path.expandvars(value))
        if expanded == value:
            return expanded
        value = expanded


def _parse(text, source):
    try:
        return YAML(typ='safe').load(text)
    except YAMLError as err:
        raise ConfigLoadError('The configuration in {} is not valid YAML: {}'.format(source, err))


def _merge(target, overlay):
    """ Copy the values of overlay into target, descending into sections both share. """
    for key, value in overlay.items():
        if isinstance(target.get(key), dict) and isinstance(value, dict):
            _merge(target[key], value)
        else:
            target[key] = value


class Config:
    """ The trilist settings: the built-in defaults overlaid by a YAML file or a dictionary.

    Every setting has a default, so a file only lists what it changes. Sections are
    exposed as properties returning plain dictionaries.
    """
    def __init__(self):
        self._config = None

    @classmethod
    def from_file(cls, filename, *, strict=True):
        """ Return the configuration of a file, see load_from_file(). """
        config = cls()
        config.load_from_file(filename, strict=strict)
        return config

    @classmethod
    def from_dict(cls, conf_dict):
        """ Return the defaults overlaid by a (partial) configuration dictionary. """
        config = cls()
        config.load_from_dict(conf_dict)
        return config

    @staticmethod
    def locate():
        """ Return the configuration file to use when none is given, or None.

        The path in TRILIST_CONFIG wins over a trilist.cfg in the working directory,
        which wins over one in the home directory.
        """
        if TRILIST_CONFIG_ENV in os.environ:
            return expand_env_var(os.environ[TRILIST_CONFIG_ENV])
        for folder in (os.getcwd(), expand_env_var('~')):
            candidate = os.path.join(folder, TRILIST_CONFIG_NAME)
            if os.path.isfile(candidate):
                return candidate
        return None

    def load_from_file(self, filename=None, *, strict=True):
        """ Reset to the defaults and overlay a configuration file.

        Args:
            filename (str): The file to read. Located with locate() when omitted.
            strict (bool): Fail when no file is given and none can be located, instead
                of keeping the defaults.

        Raises:
            ConfigLoadError: If no file is found in strict mode, or the file is missing,
                a directory or not valid YAML.
        """
        self.set_to_default()
        path = filename or self.locate()
        if path is None:
            if strict:
                raise ConfigLoadError('Could not find the configuration file.')
            return

        if os.path.isdir(path):
            raise ConfigLoadError('The configuration path {} is a directory'.format(path))
        try:
            with open(path, 'r') as stream:
                content = _parse(stream.read(), path)
        except OSError as err:
            raise ConfigLoadError('Cannot read the configuration {}: {}'.format(path, err))
        if content is not None:
            _merge(self._config, content)

    def load_from_dict(self, conf_dict=None):
        """ Reset to the defaults and overlay a dictionary of settings. """
        self.set_to_default()
        if conf_dict is not None:
            _merge(self._config, conf_dict)

    def set_to_default(self):
        self._config = _parse(self.default(), 'the defaults')

    def to_dict(self):
        """ Return a shallow copy of all settings. """
        return dict(self._config)

    def _section(self, name):
        if self._config.get(name) is None:
            raise ConfigFieldError(
                'The {} section is missing in the configuration'.format(name))
        return self._config[name]

    @property
    def neigh(self):
        """ Return the stop rule and start of the neighborhood optimization. """
        return self._section('neigh')

    @property
    def guards(self):
        """ Return the largest instances the exhaustive oracles accept.

        TRILIST_GUARD_N, when set, replaces exhaustive_n.
        """
        guards = dict(self._section('guards'))
        if TRILIST_GUARD_ENV in os.environ:
            try:
                guards['exhaustive_n'] = int(os.environ[TRILIST_GUARD_ENV])
            except ValueError:
                raise ConfigFieldError('{} must be an integer, got {!r}'.format(
                    TRILIST_GUARD_ENV, os.environ[TRILIST_GUARD_ENV]))
        return guards

    @property
    def listing(self):
        return self._section('listing')

    @property
    def bench(self):
        """ Return the orderings, algorithms and repeats of a benchmark run. """
        return self._section('bench')

    @property
    def cli(self):
        return self._section('cli')

    @property
    def logging(self):
        """ Return the dictConfig dictionary of the logging setup. """
        return self._section('logging')

    @staticmethod
    def default():
        """ Return the default configuration as YAML text. """
        return '''
neigh:
  eps: 0.01
  max_sweeps: 50
  initial: split

guards:
  exhaustive_n: 11
  nae_vars: 20
  setcover_sets: 20
  gadget_vertices: 10000

listing:
  algorithm: apm
  threads: 1

bench:
  repeats: 3
  orderings:
    - identity
    - random
    - degree
    - core
    - split
    - check
    - neigh
  algorithms:
    - app
    - apm

cli:
  float_format: '{:.3f}'

logging:
  version: 1
  disable_existing_loggers: false
  formatters:
    verbose:
      format: '[%(asctime)s][%(levelname)s] %(name)s %(filename)s:%(funcName)s:%(lineno)d | %(message)s'
      datefmt: '%d/%m/%Y %H:%M:%S'
    simple:
      (): 'colorlog.ColoredFormatter'
      format: '%(log_color)s[%(asctime)s][%(levelname)s]%(reset)s %(blue)s%(name)s%(reset)s | %(message)s'
      datefmt: '%d/%m/%Y %H:%M:%S'
    plain:
      format: '[%(asctime)s][%(levelname)s] %(name)s | %(message)s'
      datefmt: '%d/%m/%Y %H:%M:%S'
  handlers:
    console:
      class: logging.StreamHandler
      level: DEBUG
      formatter: simple
      stream: ext://sys.stderr
  loggers:
    trilist:
      handlers:
        - console
      level: INFO
      propagate: false

    root:
      handlers:
        - console
      level: WARNING
    '''
