import pytest

from dellkit import fixtures


@pytest.fixture(scope="session")
def lin3():
    return fixtures.lin(3, 2)


@pytest.fixture(scope="session")
def sim5():
    return fixtures.sim(5)


@pytest.fixture(scope="session")
def sim2():
    return fixtures.sim(2)


@pytest.fixture(scope="session")
def cycle3():
    return fixtures.cycle(3, 2)


@pytest.fixture(scope="session")
def contra84():
    return fixtures.contra(8, 4)
