import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from homlie import corpus  # noqa: E402


@pytest.fixture(scope="session")
def algebras():
    return corpus.corpus()


@pytest.fixture
def affine():
    return corpus.affine()


@pytest.fixture
def sl2():
    return corpus.sl2()
