import pytest

from laguerre_dd.finite_field import make_field
from laguerre_dd.projectivities import enumerate_group


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf7():
    return make_field(7, 1)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def gamma3():
    return enumerate_group(make_field(3, 1))


@pytest.fixture(scope="session")
def gamma4(gf4):
    return enumerate_group(gf4)
