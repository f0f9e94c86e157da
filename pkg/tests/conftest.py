import pytest

from nfaindex import gen_fixture, gen_separation_family


@pytest.fixture
def fig2():
    return gen_fixture("fig2")


@pytest.fixture
def wheeler3():
    return gen_fixture("wheeler3")


@pytest.fixture
def sep6():
    return gen_separation_family(6)
