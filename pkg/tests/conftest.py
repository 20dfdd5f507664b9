import pytest

from gridcount import build_totient_table


@pytest.fixture(scope="session")
def table100():
    return build_totient_table(100)


@pytest.fixture(scope="session")
def table10k():
    return build_totient_table(10**4)
