import pytest


@pytest.fixture
def pairing_fixture():
    return [[1, 0], [0, 1], [1, 0], [0, 1]]
