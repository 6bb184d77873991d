import numpy as np
import pytest
from hypothesis import settings

# some examples run exhaustive scans, so no per-example deadline
settings.register_profile('default', deadline=None)
settings.register_profile('full_scale', deadline=None, max_examples=1000)
settings.load_profile('default')


def pytest_addoption(parser):
    parser.addoption('--full_scale', action='store_true', default=False,
                     help='run the acceptance-size searches and sweeps')
    parser.addoption('--seed', metavar='seed', type=int, default=0,
                     help='seed of the numpy random tests')


def pytest_configure(config):
    config.addinivalue_line('markers',
                            'full_scale: long run, needs --full_scale')
    if config.getoption('full_scale'):
        settings.load_profile('full_scale')


def pytest_collection_modifyitems(config, items):
    if config.getoption('full_scale'):
        return
    skip = pytest.mark.skip(reason='needs --full_scale')
    for item in items:
        if 'full_scale' in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng(request):
    return np.random.default_rng(request.config.getoption('seed'))
