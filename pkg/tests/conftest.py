import pytest

from groupca import Alphabet, GroupContext, builtin_rule


@pytest.fixture
def Z():
    return GroupContext.integers(1)


@pytest.fixture
def F2():
    return GroupContext.free(2)


@pytest.fixture
def B2():
    return Alphabet(2)


@pytest.fixture
def xor():
    return builtin_rule("xor")
