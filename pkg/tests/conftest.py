import pytest

from innaut.constructors import clifford8, strict4


@pytest.fixture(scope="session")
def cliff():
    return clifford8()


@pytest.fixture(scope="session")
def strict():
    return strict4()
