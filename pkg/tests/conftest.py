import pytest

from rigidkit import catalog as cat

SEED = 20240601


@pytest.fixture(scope="session")
def seed():
    return SEED


@pytest.fixture(scope="session")
def r7():
    return cat.ring_of_butterflies(7)


@pytest.fixture(scope="session")
def dbl_banana():
    return cat.double_banana()
