import pytest

from lea import models
from lea.groupoid import EffectGroupoid

# Groupoid tables written out by hand (elements 0, a, b, 1 -> 0, 1, 2, 3),
# independently of the effect-algebra translation.

B2_G = EffectGroupoid(2, [[0, 0], [0, 1]], [1, 0], 0, 1)

L3_G = EffectGroupoid(3, [[0, 0, 0], [0, 0, 1], [0, 1, 2]], [2, 1, 0], 0, 2)

# a' = b, b * b = a, every other product of middle elements is 0
L4_G = EffectGroupoid(
    4,
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
    [3, 2, 1, 0], 0, 3,
)

# a' = b, a * a = a, b * b = b, a * b = b * a = 0
BOOL4_G = EffectGroupoid(
    4,
    [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]],
    [3, 2, 1, 0], 0, 3,
)

# a' = a, b' = b, a * a = b * b = 0, a * b = b, b * a = a
HSUM_G = EffectGroupoid(
    4,
    [[0, 0, 0, 0], [0, 0, 2, 1], [0, 1, 0, 2], [0, 1, 2, 3]],
    [3, 1, 2, 0], 0, 3,
)


@pytest.fixture
def b2():
    return models.b2()


@pytest.fixture
def l3():
    return models.l3()


@pytest.fixture
def l4():
    return models.l4()


@pytest.fixture
def bool4():
    return models.boolean4()


@pytest.fixture
def hsum():
    return models.horizontal_sum()


@pytest.fixture(scope="session")
def catalog5():
    from lea.enumeration import cached_catalog

    return cached_catalog(5)


@pytest.fixture(scope="session")
def catalog4(catalog5):
    return catalog5.restricted(4)
