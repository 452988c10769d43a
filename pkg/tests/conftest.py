import pytest

from gravibounce import default_constants, scales


@pytest.fixture(scope="session")
def constants():
    return default_constants()


@pytest.fixture(scope="session")
def bouncer_scales(constants):
    return scales(constants)
