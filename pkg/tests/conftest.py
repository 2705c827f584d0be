import pytest

from heckeperiods import kronecker_character, load_fixtures


@pytest.fixture(scope="session")
def chi3():
    return kronecker_character(-3)


@pytest.fixture(scope="session")
def chi5():
    return kronecker_character(5)


@pytest.fixture(scope="session")
def registry():
    return load_fixtures()
