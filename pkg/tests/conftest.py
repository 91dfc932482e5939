import pytest

from coringlab.corpus import CORPUS


@pytest.fixture(scope="session")
def corpus():
    return CORPUS
