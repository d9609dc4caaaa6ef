"""Shared helpers: seeded random signals and the worked fixture pairs."""

import random
from fractions import Fraction

import pytest

from abelcorr import Group, Signal

# the integer fixtures used across the suite
Z6_F = [13, 11, -2, -13, -11, 2]
Z6_G = [14, 7, -7, -14, -7, 7]

Z30_F = [56, -7, 7, 14, 7, 28, -14, -7, 7, 14, -28, -7, -14, -7, 7,
         -56, 7, -7, -14, -7, -28, 14, 7, -7, -14, 28, 7, 14, 7, -7]
Z30_G = [52, -2, 11, 13, 2, 44, -13, -2, 11, 13, -8, -11, -13, -2, 11,
         -52, 2, -11, -13, -2, -44, 13, 2, -11, -13, 8, 11, 13, 2, -11]


def random_int_signal(rng: random.Random, group: Group, bound: int = 9) -> Signal:
    return Signal(group, [rng.randint(-bound, bound) for _ in range(group.order)])


def random_rational_signal(rng: random.Random, group: Group, bound: int = 9) -> Signal:
    values = [
        Fraction(rng.randint(-bound, bound), rng.randint(1, 6))
        for _ in range(group.order)
    ]
    return Signal(group, values)


@pytest.fixture
def rng():
    return random.Random(20260817)


@pytest.fixture(name="random_int_signal")
def random_int_signal_fixture():
    return random_int_signal


@pytest.fixture(name="random_rational_signal")
def random_rational_signal_fixture():
    return random_rational_signal


@pytest.fixture
def z6_pair():
    g = Group([6])
    return Signal(g, Z6_F), Signal(g, Z6_G)


@pytest.fixture
def z30_pair():
    g = Group([30])
    return Signal(g, Z30_F), Signal(g, Z30_G)
