"""Command line tests"""

import json
import os

import pytest

from harmony import app as harmony_app
from harmony import cli

dirname = os.path.dirname(os.path.dirname(__file__))


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_seq(capsys):
    status, out, _ = run(capsys, 'seq', '--family', 'harmonic_like',
                         '--m', '2', '--n', '5')
    assert status == 0
    assert out == 'n,value\n0,0\n1,0\n2,1\n3,2\n4,35/12\n5,15/4\n'


def test_seq_stirling(capsys):
    status, out, _ = run(capsys, 'seq', '--family', 'stirling1', '--k', '2',
                         '--n', '5')
    assert status == 0
    assert out.splitlines()[-1] == '5,-50'


def test_seq_json(capsys):
    status, out, _ = run(capsys, 'seq', '--family', 'harmonic', '--n', '4',
                         '--format', 'json')
    assert status == 0
    assert json.loads(out)[-1] == {'n': 4, 'value': '25/12'}


def test_seq_decimal(capsys):
    status, out, _ = run(capsys, 'seq', '--family', 'harmonic', '--n', '3',
                         '--decimal', '6')
    assert status == 0
    assert out.splitlines()[0] == 'n,value,decimal'
    assert out.splitlines()[-1] == '3,11/6,1.83333'


@pytest.mark.parametrize('argv', [
    ('seq', '--family', 'harmonic_like', '--m', '-1', '--n', '3'),
    ('seq', '--family', 'harmonic_like', '--n', '3'),
    ('seq', '--family', 'no_such', '--n', '3'),
    ('seq', '--family', 'harmonic', '--n', 'x'),
    ('seq', '--family', 'harmonic', '--m', '2', '--n', '3'),
    ('seq', '--family', 'hyperharmonic', '--p', '0', '--n', '3'),
])
def test_seq_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ''
    assert 'error' in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['seq', '--n', '3'])
    assert excinfo.value.code == 2


def test_verify_identity(capsys):
    status, out, _ = run(capsys, 'verify', '--id', 'cor_id1',
                         '--n-max', '10', '--m-max', '3')
    assert status == 0
    report, = json.loads(out)
    assert report['identity'] == 'cor_id1'
    assert report['cases'] == 44
    assert report['passed'] is True


def test_verify_tag(capsys):
    status, out, _ = run(capsys, 'verify', '--tag', 'section4')
    assert status == 0
    loaded = json.loads(out)
    assert loaded
    assert all(report['passed'] for report in loaded)
    ids = [report['identity'] for report in loaded]
    assert ids == sorted(ids)


def test_verify_csv(capsys):
    status, out, _ = run(capsys, 'verify', '--id', 'cor_id3', '--format',
                         'csv')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == 'identity,cases,passed,binding,lhs,rhs,elapsed_ms'
    assert lines[1].startswith('cor_id3,')


def test_verify_unknown(capsys):
    status, out, err = run(capsys, 'verify', '--id', 'no_such')
    assert status == 2
    assert out == ''
    assert 'no_such' in err
    status, _, _ = run(capsys, 'verify', '--tag', 'no_such_tag')
    assert status == 2


def test_verify_list(capsys):
    status, out, _ = run(capsys, 'verify', '--list')
    assert status == 0
    catalog = json.loads(out)
    assert len(catalog) >= 45
    assert {'id', 'title', 'tags', 'anchor', 'grid'} == set(catalog[0])


def test_verify_failure_exits_1(capsys, monkeypatch, broken_app):
    monkeypatch.setattr(harmony_app.Harmony, 'with_builtins',
                        classmethod(lambda cls, **config: broken_app))
    status, out, _ = run(capsys, 'verify', '--id', 'broken_cor_id1')
    assert status == 1
    report, = json.loads(out)
    assert report['first_failure']['binding'] == {'n': 3, 'm': 2}


def test_gf_check(capsys):
    status, out, _ = run(capsys, 'gf-check', '--family', 'harmonic_like',
                         '--m', '3', '--order', '40')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == 'n,recurrence_value,gf_value,equal'
    assert len(lines) == 42
    assert all(line.endswith(',true') for line in lines[1:])


def test_gf_check_odd_central(capsys):
    status, out, _ = run(capsys, 'gf-check', '--family', 'odd_central',
                         '--order', '30')
    assert status == 0
    assert len(out.splitlines()) == 32


def test_gf_check_unsupported(capsys):
    status, out, _ = run(capsys, 'gf-check', '--family', 'fibonacci')
    assert status == 2
    assert out == ''


def test_transform_binomial_sum(capsys):
    status, out, _ = run(capsys, 'transform', '--a', '1', '--b', '1',
                         '--m', '1', '--n', '2')
    assert status == 0
    assert out.splitlines()[-1] == '2,7/2'


@pytest.mark.parametrize('route', ['direct', 'closed', 'gf'])
def test_transform_routes(capsys, route):
    status, out, _ = run(capsys, 'transform', '--a', '-1', '--b', '1',
                         '--m', '2', '--n', '3', '--route', route)
    assert status == 0
    assert out.splitlines()[-1] == '3,1'


def test_transform_zero_weights(capsys):
    status, out, _ = run(capsys, 'transform', '--a', '0', '--b', '0',
                         '--m', '0', '--n', '0')
    assert status == 0
    assert out == 'n,value\n0,1\n'


def test_transform_negative_fraction(capsys):
    status, out, _ = run(capsys, 'transform', '--a=-1/2', '--b', '1/3',
                         '--m', '1', '--n', '1')
    assert status == 0
    # S_1 = b H_0 + a H_1
    assert out.splitlines()[-1] == '1,-1/2'


def test_transform_family(capsys):
    status, out, _ = run(capsys, 'transform', '--family', 'harmonic',
                         '--n', '4', '--signed')
    assert status == 0
    assert out.splitlines()[1:] == ['0,0', '1,-1', '2,-1/2', '3,-1/3',
                                    '4,-1/4']


def test_transform_missing_arguments(capsys):
    status, _, _ = run(capsys, 'transform', '--a', '1', '--b', '1',
                       '--n', '2')
    assert status == 2
    status, _, _ = run(capsys, 'transform', '--n', '2')
    assert status == 2


def test_output_file(capsys, tmpdir):
    path = tmpdir.join('h.csv')
    status, out, _ = run(capsys, 'seq', '--family', 'harmonic', '--n', '2',
                         '--output', str(path))
    assert status == 0
    assert out == ''
    assert path.read() == 'n,value\n0,0\n1,1\n2,3/2\n'


def test_output_dir_from_environment(capsys, tmpdir, monkeypatch):
    monkeypatch.setenv(harmony_app.OUTPUT_DIR_ENV, str(tmpdir))
    status, _, _ = run(capsys, 'seq', '--family', 'harmonic', '--n', '1',
                       '--output', 'relative.csv')
    assert status == 0
    assert tmpdir.join('relative.csv').read() == 'n,value\n0,0\n1,1\n'


def test_config_option(capsys):
    status, _, _ = run(capsys, 'verify', '--id', 'cor_id3', '--config',
                       dirname + '/tests/config/config.yml')
    assert status == 0
    status, _, err = run(capsys, 'verify', '--id', 'cor_id3', '--config',
                         dirname + '/tests/config/unknown_key.yml')
    assert status == 2
    assert 'Unknown config keys' in err


def test_output_is_deterministic(capsys):
    argv = ('gf-check', '--family', 'stirling1', '--k', '3', '--order', '20')
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_verify_is_deterministic(capsys):
    argv = ('verify', '--tag', 'section2', '--n-max', '8')
    runs = []
    for _ in range(2):
        status, out, _ = run(capsys, *argv)
        assert status == 0
        reports = json.loads(out)
        for report in reports:
            assert report.pop('elapsed_ms') >= 0
        runs.append(json.dumps(reports, sort_keys=True))
    assert runs[0] == runs[1]
