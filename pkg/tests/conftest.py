import pytest

from ecpf.cli import bundled_curve


@pytest.fixture(scope="session")
def smoke17():
    return bundled_curve("smoke17")


@pytest.fixture(scope="session")
def p192():
    return bundled_curve("p192")
