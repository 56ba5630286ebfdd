import pytest

from ellfm import make_base


@pytest.fixture(scope="session")
def P2():
    return make_base("P2")


@pytest.fixture(scope="session")
def F0():
    return make_base("F0")


@pytest.fixture(scope="session")
def F1():
    return make_base("F1")


@pytest.fixture(scope="session", params=["P2", "F0", "F1"])
def any_base(request):
    return make_base(request.param)
