import os

import pytest

from mlat import catalog

TEST_ROOT_DIR = os.path.abspath(os.path.dirname(__file__))
TEST_DATA_DIR = os.path.join(TEST_ROOT_DIR, "data")
STRUCTURES_DIR = os.path.join(TEST_DATA_DIR, "structures")


@pytest.fixture
def output_dir(tmp_path):
    """
    Per-test output directory for logs and reports
    """
    return str(tmp_path / 'mlat_output')


@pytest.fixture(scope='session')
def s3():
    return catalog.group('S3')


@pytest.fixture(scope='session')
def q8():
    return catalog.group('Q8')


@pytest.fixture(scope='session')
def dvr3():
    return catalog.lattice('chain-dvr-3')
