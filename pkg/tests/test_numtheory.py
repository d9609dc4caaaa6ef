import random
from math import gcd

import pytest

from abelcorr.numtheory import (
    crt,
    crt_pair,
    divisor_count,
    divisors,
    euler_phi,
    is_power_of_two,
    is_square,
    lift_unit,
    prime_factors,
    units_mod,
    xgcd,
)


def test_prime_factors_basic():
    assert prime_factors(1) == ()
    assert prime_factors(12) == ((2, 2), (3, 1))
    assert prime_factors(97) == ((97, 1),)
    assert prime_factors(360) == ((2, 3), (3, 2), (5, 1))


def test_prime_factors_reconstruct():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 10**6)
        prod = 1
        for p, e in prime_factors(n):
            prod *= p**e
        assert prod == n


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(28) == (1, 2, 4, 7, 14, 28)
    assert divisor_count(49) == 3
    assert divisor_count(91) == 4


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert euler_phi(30) == 8
    # multiplicativity on coprime pairs
    assert euler_phi(7 * 9) == euler_phi(7) * euler_phi(9)


def test_units_mod():
    assert units_mod(1) == (0,)
    assert units_mod(2) == (1,)
    assert units_mod(12) == (1, 5, 7, 11)
    assert len(units_mod(30)) == 8


def test_power_of_two_and_square():
    assert is_power_of_two(1) and is_power_of_two(64)
    assert not is_power_of_two(12) and not is_power_of_two(0)
    assert is_square(0) and is_square(49)
    assert not is_square(2) and not is_square(-4)


def test_xgcd():
    rng = random.Random(9)
    for _ in range(100):
        a, b = rng.randint(-500, 500), rng.randint(-500, 500)
        g, s, t = xgcd(a, b)
        assert g == gcd(a, b)
        assert s * a + t * b == g


def test_crt():
    assert crt_pair(1, 4, 1, 3) == 1
    assert crt([1, 2], [4, 3]) % 4 == 1
    assert crt([1, 2], [4, 3]) % 3 == 2
    rng = random.Random(2)
    for _ in range(50):
        x = rng.randint(0, 12 * 35 - 1)
        assert crt([x % 4, x % 3, x % 35], [4, 3, 35]) == x


def test_lift_unit():
    """A unit mod M lifts to a unit mod E congruent to it mod M."""
    rng = random.Random(31)
    cases = [(3, 6), (6, 30), (5, 30), (4, 12), (2, 30), (1, 7)]
    for M, E in cases:
        for u in units_mod(M):
            v = lift_unit(u, M, E)
            assert gcd(v, E) == 1
            assert v % M == u % M
