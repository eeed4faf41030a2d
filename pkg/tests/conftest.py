import numpy as np
import pytest

from qsymp import bacon_shor_code, repetition_code, shor_code


@pytest.fixture(scope="session")
def repetition():
    return repetition_code()


@pytest.fixture(scope="session")
def bacon_shor():
    return bacon_shor_code()


@pytest.fixture(scope="session")
def shor():
    return shor_code()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
