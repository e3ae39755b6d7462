import collections.abc
import configparser
import fnmatch
import logging
import os

log = logging.getLogger('octolab.config')

DEFAULT_FILENAME = 'octolab.ini'

# section name pattern -> value type
SECTION_TYPES = {
    'sampling': int,
    'catalog': str,
    'verify': str,
}

DEFAULTS = {
    'sampling.seed': 1995,
    'sampling.composition_pairs': 500,
    'sampling.bioctonion_pairs': 200,
    'sampling.calibration_triples': 1000,
    'sampling.alternativity_pairs': 200,
    'sampling.xproduct_samples': 100,
    'verify.format': 'text',
    'verify.patterns': 'all',
}


class ConfigError(ValueError):
    def __str__(self):
        return '{}: {}'.format(*self.args)


class TypedSection(collections.abc.Mapping):
    """One INI section whose values are converted on access"""

    def __init__(self, proxy, type=str):
        self.proxy = proxy
        self.type = type

    def __getitem__(self, item):
        value = self.proxy[item]
        try:
            return self.type(value)
        except ValueError:
            raise ConfigError(f'{self.proxy.name}.{item}', f'bad value {value!r}')

    def __setitem__(self, item, value):
        self.proxy[item] = str(value)

    def __iter__(self):
        return iter(self.proxy)

    def __len__(self):
        return len(self.proxy)


class LabConfig:
    """Run configuration, read from an INI file with typed sections.

    Values are looked up with dotted keys and fall back to DEFAULTS:

    >>> LabConfig()['sampling.seed']
    1995
    """
    def __init__(self, fileobj=None):
        cp = configparser.ConfigParser(comment_prefixes='#', inline_comment_prefixes='#')
        if fileobj is not None:
            cp.read_file(fileobj)
        types = {section: self._section_type(section) for section in cp.sections()}
        for section, type in SECTION_TYPES.items():
            if not cp.has_section(section):
                cp.add_section(section)
                types[section] = type
        self.sections = {section: TypedSection(cp[section], type)
                         for section, type in types.items()}
        # StringIO has no name
        self.filename = getattr(fileobj, 'name', None)

    @staticmethod
    def _section_type(section):
        for pattern, type in SECTION_TYPES.items():
            if fnmatch.fnmatch(section, pattern):
                return type
        raise ConfigError(section, 'unknown section')

    @classmethod
    def load(cls, filename=None):
        """Read filename, or octolab.ini if present, or nothing"""
        if filename is None:
            if not os.path.exists(DEFAULT_FILENAME):
                return cls()
            filename = DEFAULT_FILENAME
        with open(filename) as fileobj:
            config = cls(fileobj)
        log.info('configuration read from %s', filename)
        return config

    def __getitem__(self, key):
        section, _, item = key.partition('.')
        try:
            return self.sections[section][item]
        except KeyError:
            if key in DEFAULTS:
                return DEFAULTS[key]
            raise

    def catalog_literals(self):
        return [value for name, value in self.sections['catalog'].items()]

    def echo(self):
        """The effective configuration, defaults included"""
        out = {key: self[key] for key in DEFAULTS}
        out['catalog'] = self.catalog_literals()
        return out
