"""Small number-theoretic helpers shared across the package."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 into sorted (prime, exponent) pairs by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in prime_factors(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisor_count(n: int) -> int:
    count = 1
    for _, e in prime_factors(n):
        count *= e + 1
    return count


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in prime_factors(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


@lru_cache(maxsize=None)
def units_mod(n: int) -> tuple[int, ...]:
    """Residues coprime to n, ascending.  units_mod(1) == (0,)."""
    if n == 1:
        return (0,)
    return tuple(u for u in range(1, n) if gcd(u, n) == 1)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def crt_pair(a1: int, m1: int, a2: int, m2: int) -> int:
    """Residue mod m1*m2 matching a1 mod m1 and a2 mod m2 (coprime moduli)."""
    g, x, _ = xgcd(m1, m2)
    if g != 1:
        raise ValueError(f"moduli {m1}, {m2} are not coprime")
    return (a1 + (a2 - a1) * x % m2 * m1) % (m1 * m2)


def crt(residues: list[int], moduli: list[int]) -> int:
    a, m = 0, 1
    for r, n in zip(residues, moduli):
        a = crt_pair(a, m, r, n)
        m *= n
    return a


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lift_unit(u: int, small: int, big: int) -> int:
    """Lift a unit u mod `small` to a unit mod `big` (small divides big).

    The reduction map on unit groups is surjective, so a lift always exists;
    we take the first one in the arithmetic progression u, u+small, ...
    """
    if big % small != 0:
        raise ValueError(f"{small} does not divide {big}")
    if small == 1:
        return 1 % big if big > 1 else 0
    for t in range(big // small):
        cand = (u + t * small) % big
        if gcd(cand, big) == 1:
            return cand
    raise ArithmeticError(f"no unit lift of {u} from {small} to {big}")
