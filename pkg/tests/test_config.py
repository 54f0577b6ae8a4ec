import concurrent.futures
import os

import config_module
import pytest

from harmony import Harmony, app as harmony_app, exception

dirname = os.path.dirname(os.path.dirname(__file__))


@pytest.fixture(params=[0, 1])
def conf_module(request):
    if request.param:
        return 'config_module'
    else:
        return config_module


def test_app_default_config(bare_app):
    assert bare_app.config['bruteforce_ceiling'] == 200000
    assert bare_app.config['workers'] == 4
    assert bare_app.config['output_dir'] is None
    assert bare_app.config['executor'] is \
        concurrent.futures.ThreadPoolExecutor


def test_app_custom_config():
    app = Harmony(workers=2, bruteforce_ceiling=10)
    assert app.config['workers'] == 2
    assert app.config['bruteforce_ceiling'] == 10
    assert app.config['executor'] is concurrent.futures.ThreadPoolExecutor


def test_app_config_from_json(bare_app):
    bare_app.config_from_file(dirname + '/tests/config/config.json')
    assert bare_app.config['bruteforce_ceiling'] == 1000
    assert bare_app.config['workers'] == 3
    assert bare_app.config['output_dir'] == '/tmp/harmony-reports'
    assert bare_app.config['executor'] is \
        concurrent.futures.ProcessPoolExecutor


def test_app_config_from_yaml(bare_app):
    bare_app.config_from_file(dirname + '/tests/config/config.yml')
    assert bare_app.config['bruteforce_ceiling'] == 5000
    assert bare_app.config['workers'] == 2
    assert bare_app.config['output_dir'] is None
    assert bare_app.config['executor'] is \
        concurrent.futures.ThreadPoolExecutor


def test_app_config_from_module(bare_app, conf_module):
    bare_app.config_from_module(conf_module)
    assert bare_app.config['bruteforce_ceiling'] == 5000
    assert bare_app.config['workers'] == 2
    assert bare_app.config['output_dir'] == '/tmp/harmony'


def test_unknown_config_keys(bare_app):
    with pytest.raises(exception.ConfigError):
        bare_app.config_from_file(dirname + '/tests/config/unknown_key.yml')
    with pytest.raises(exception.ConfigError):
        Harmony(hosts=['localhost'])


def test_unknown_config_format(bare_app):
    with pytest.raises(exception.ConfigError):
        bare_app.config_from_file('config.ini')


def test_missing_config_file(bare_app, tmpdir):
    with pytest.raises(exception.ConfigError):
        bare_app.config_from_file(str(tmpdir.join('missing.yml')))


def test_config_must_be_mapping(bare_app, tmpdir):
    path = tmpdir.join('list.json')
    path.write('[1, 2, 3]')
    with pytest.raises(exception.ConfigError):
        bare_app.config_from_file(str(path))


def test_bad_executor_path():
    with pytest.raises(exception.ConfigError):
        Harmony(executor='NoDots')
    with pytest.raises(exception.ConfigError):
        Harmony(executor='concurrent.futures.NoSuchExecutor')
    with pytest.raises(exception.ConfigError):
        Harmony(executor='no_such_module.Executor')


def test_output_dir_from_environment(bare_app, monkeypatch):
    monkeypatch.setenv(harmony_app.OUTPUT_DIR_ENV, '/tmp/from-env')
    assert bare_app.output_dir == '/tmp/from-env'
    configured = Harmony(output_dir='/tmp/configured')
    assert configured.output_dir == '/tmp/configured'


def test_output_dir_unset(bare_app, monkeypatch):
    monkeypatch.delenv(harmony_app.OUTPUT_DIR_ENV, raising=False)
    assert bare_app.output_dir is None
