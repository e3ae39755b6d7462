from io import StringIO

import pytest

from octolab.config import ConfigError, DEFAULTS, LabConfig


CONFIG_STRING = """
[sampling]
seed = 42
calibration_triples = 10   # quick runs

[catalog]
p1 = 3/5e3-4/5e6
p2 = e5

[verify]
format = json
"""


def test_defaults():
    config = LabConfig()
    assert config['sampling.seed'] == DEFAULTS['sampling.seed']
    assert config['verify.format'] == 'text'
    assert config.catalog_literals() == []
    assert config.filename is None


def test_values_from_file():
    config = LabConfig(StringIO(CONFIG_STRING))
    assert config['sampling.seed'] == 42
    assert config['sampling.calibration_triples'] == 10
    assert config['sampling.composition_pairs'] == DEFAULTS['sampling.composition_pairs']
    assert config['verify.format'] == 'json'
    assert config.catalog_literals() == ['3/5e3-4/5e6', 'e5']


def test_unknown_key():
    with pytest.raises(KeyError):
        LabConfig()['sampling.nothing']


def test_unknown_section():
    with pytest.raises(ConfigError) as excinfo:
        LabConfig(StringIO('[plotting]\ncolour = red\n'))
    assert str(excinfo.value) == 'plotting: unknown section'


def test_bad_value():
    config = LabConfig(StringIO('[sampling]\nseed = many\n'))
    with pytest.raises(ConfigError) as excinfo:
        config['sampling.seed']
    assert 'sampling.seed' in str(excinfo.value)


def test_section_access():
    config = LabConfig(StringIO(CONFIG_STRING))
    section = config.sections['sampling']
    assert dict(section.items()) == {'seed': 42, 'calibration_triples': 10}
    assert section.get('xproduct_samples', 3) == 3
    section['seed'] = 5
    assert config['sampling.seed'] == 5


def test_echo():
    echo = LabConfig(StringIO(CONFIG_STRING)).echo()
    assert echo['sampling.seed'] == 42
    assert echo['verify.patterns'] == 'all'
    assert echo['catalog'] == ['3/5e3-4/5e6', 'e5']


def test_load(tmp_path, monkeypatch):
    path = tmp_path / 'lab.ini'
    path.write_text(CONFIG_STRING)
    config = LabConfig.load(path)
    assert str(config.filename) == str(path)
    assert config['sampling.seed'] == 42

    monkeypatch.chdir(tmp_path)
    assert LabConfig.load()['sampling.seed'] == DEFAULTS['sampling.seed']
    (tmp_path / 'octolab.ini').write_text('[sampling]\nseed = 3\n')
    assert LabConfig.load()['sampling.seed'] == 3
