import numpy as np
import pytest

from cfqpr import utils


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(autouse=True)
def no_pbars(monkeypatch):
    monkeypatch.setattr(utils, 'use_pbars', False)


@pytest.fixture
def example_channel():
    """Channel and power of the worked three-user example."""
    return np.array([-1.9, 0.1, 1.1]), 10.0
