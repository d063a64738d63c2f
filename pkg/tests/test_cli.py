import json
import os

import jsonlines
import yaml
from click.testing import CliRunner

from conftest import STRUCTURES_DIR
from mlat import catalog, cli
from mlat.config import DEFAULT_CATALOG_REPORTS_FILE, DEFAULT_LOG_FILENAME
from mlat.structure import load_structure

S3_PATH = os.path.join(STRUCTURES_DIR, 's3.json')
ZP2_PATH = os.path.join(STRUCTURES_DIR, 'zp2.json')


def _invoke(output_dir, *args):
    runner = CliRunner()
    return runner.invoke(cli.cli, list(args) + ['-o', output_dir])


def test_hyperabelian(output_dir):
    """
    Test mlat.cli.hyperabelian_command
    """
    result = _invoke(output_dir, 'hyperabelian', S3_PATH)
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    conditions = report['hyperabelian']['conditions']
    assert len(conditions) == 6
    assert all(conditions.values())
    assert report['falsification_events'] == []
    assert os.path.isfile(
        os.path.join(output_dir, 'logs', DEFAULT_LOG_FILENAME)
    )


def test_spec(output_dir):
    """
    Test mlat.cli.spec_command
    """
    result = _invoke(output_dir, 'spec', ZP2_PATH)
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['spectrum']['primes'] == ['c_1']

    result = _invoke(output_dir, 'spec', ZP2_PATH, '--out', 'text')
    assert result.exit_code == 0, result.output
    assert yaml.safe_load(result.output)['spectrum']['primes'] == ['c_1']


def test_validate(output_dir):
    """
    Test mlat.cli.validate
    """
    result = _invoke(output_dir, 'validate', 'catalog:Q8')
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['elements'] == ['1', 'N2', 'N4a', 'N4b', 'N4c', 'Q8']
    assert 'spectrum' not in report


def test_classify(output_dir):
    """
    Test mlat.cli.classify_command
    """
    result = _invoke(output_dir, 'classify', 'catalog:A5')
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['structure']['perfect']
    assert report['classification']['A5']['idempotent']

    result = _invoke(output_dir, 'classify', 'catalog:S3', '--element', 'N3')
    assert result.exit_code == 0, result.output
    assert list(json.loads(result.output)['classification']) == ['N3']


def test_series_with_multiplication(output_dir):
    """
    Test mlat.cli.series_command with the zero product
    """
    result = _invoke(output_dir, 'series', 'catalog:S3', '--mult', 'zero')
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['multiplication'] == 'zero'
    assert report['upper_central']['left']['hypercentral']


def test_brace_ybe(output_dir):
    """
    Test mlat.cli.brace_ybe
    """
    result = _invoke(output_dir, 'brace-ybe', 'catalog:radical(2Z8)')
    assert result.exit_code == 0, result.output
    ybe = json.loads(result.output)['structure']['ybe']
    assert ybe == {'bijective': True, 'braid_holds': True, 'involutive': True}

    result = _invoke(output_dir, 'brace-ybe', 'catalog:S3')
    assert result.exit_code == 1


def test_dot(output_dir):
    """
    Test mlat.cli.dot_command and lattice --out=dot
    """
    result = _invoke(output_dir, 'dot', 'catalog:chain-dvr-3')
    assert result.exit_code == 0, result.output
    assert 'digraph' in result.output
    assert 'peripheries=2' in result.output

    result = _invoke(output_dir, 'dot', 'catalog:chain-dvr-3', '--spec')
    assert result.exit_code == 0, result.output
    assert 'Spec' in result.output

    result = _invoke(output_dir, 'lattice', ZP2_PATH, '--out', 'dot')
    assert result.exit_code == 0, result.output
    assert 'digraph' in result.output


def test_user_errors(output_dir):
    """
    Test that bad invocations of mlat.cli exit with status 1
    """
    bad = [
        ['hyperabelian', S3_PATH, '--mult', 'product'],
        ['spec', ZP2_PATH, '--mult', 'commutator'],
        ['spec', ZP2_PATH, '--out', 'dot'],
        ['spec', ZP2_PATH, '--element', 'c_1'],
        ['dot', ZP2_PATH, '--out', 'json'],
        ['spec', ZP2_PATH, '--mult', 'bogus'],
        ['classify', ZP2_PATH, '--element', 'c_9'],
        ['spec', 'no_such_file.json'],
        ['spec', 'catalog:S7'],
        ['spec', '{"kind": "group", "n": 2, "cayley": [[0, 1], [1, 1]]}'],
        ['frobnicate', ZP2_PATH],
    ]
    for args in bad:
        result = _invoke(output_dir, *args)
        assert result.exit_code == 1, (args, result.output)


def test_run_command():
    """
    Test mlat.cli.run_command
    """
    doc = load_structure('catalog:Z4')
    text, events = cli.run_command(doc, 'lattice', mult='ring_commutator')
    assert events == []
    report = json.loads(text)
    assert report['multiplication'] == 'ring-commutator'
    assert report['elements'] == ['0', '(2)', '(1)']


def test_catalog(output_dir):
    """
    Test mlat.cli.catalog_command
    """
    runner = CliRunner()
    result = runner.invoke(cli.cli, ['catalog', '--kind', 'rng', '--list'])
    assert result.exit_code == 0
    assert result.output.split() == catalog.names('rng')

    result = _invoke(output_dir, 'catalog', '--kind', 'rng')
    assert result.exit_code == 0, result.output
    path = os.path.join(output_dir, DEFAULT_CATALOG_REPORTS_FILE)
    with jsonlines.open(path) as reader:
        reports = list(reader)
    assert [r['name'] for r in reports] == catalog.names('rng')
    assert all(r['falsification_events'] == [] for r in reports)


def test_full_catalog(output_dir):
    """
    Test mlat.cli.catalog_command over every built-in structure
    """
    result = _invoke(output_dir, 'catalog')
    assert result.exit_code == 0, result.output
    assert ' 0 falsification events' in result.output
    path = os.path.join(output_dir, DEFAULT_CATALOG_REPORTS_FILE)
    with jsonlines.open(path) as reader:
        reports = list(reader)
    assert [r['name'] for r in reports] == catalog.names()
    assert all(r['falsification_events'] == [] for r in reports)
