import os
import random

import pytest

from harmony import Harmony, transforms
from harmony.cache import SeqCache
from harmony.identities import section2

dirname = os.path.dirname(os.path.dirname(__file__))


@pytest.fixture
def config_dir():
    return os.path.join(dirname, 'tests', 'config')


@pytest.fixture
def app():
    return Harmony.with_builtins()


@pytest.fixture
def bare_app():
    return Harmony()


class BrokenCorId1(section2.CorId1):
    __id__ = 'broken_cor_id1'

    def rhs(self, n, m):
        result = super().rhs(n, m)
        if (n, m) == (3, 2):
            result += 1
        return result


@pytest.fixture
def broken_app():
    app = Harmony()
    app.register(section2.CorId1, BrokenCorId1)
    return app


@pytest.fixture
def cache():
    return SeqCache()


@pytest.fixture
def pairs():
    return transforms.FIXTURE_PAIRS


@pytest.fixture
def rng():
    return random.Random(20261017)
