import pytest

from ontologik.fixtures import load_reference


@pytest.fixture(scope="session")
def reference():
    return load_reference()


@pytest.fixture(scope="session")
def ont(reference):
    return reference[0]


@pytest.fixture(scope="session")
def lex(reference):
    return reference[1]
