import numpy as np
import pytest

from scldpcl import DeConfig, cutting_vector_sb


@pytest.fixture(scope="session")
def cfg():
    return DeConfig()


@pytest.fixture(scope="session")
def sb361():
    return cutting_vector_sb(3, 6, 1)


@pytest.fixture(scope="session")
def th361(sb361, cfg):
    from scldpcl import sb_thresholds

    return sb_thresholds(sb361, cfg=cfg)


@pytest.fixture()
def rng():
    return np.random.default_rng(0xC0DEC)
