"""Finite abelian groups presented as products of cyclic factors.

A group is an ordered factor list ``[N_1, ..., N_k]``; its elements are
coordinate tuples with ``coords[i]`` reduced mod ``N_i``.  The dual group is
identified with the group itself: the character with coordinates ``k`` pairs
with the element ``x`` through ``zeta ** sum_i(k_i * x_i * (E / N_i))`` where
``zeta`` is a fixed primitive root of unity of order ``E = exponent``.  Every
transform, support computation, and bound downstream leans on this single
pairing convention, so it lives here.

Elements and characters are plain tuples of ints.  They hash and sort
naturally, and the canonical iteration order is row major with the last
coordinate moving fastest.
"""

from __future__ import annotations

from array import array
from math import gcd, lcm, prod
from typing import Iterable, Iterator

Coords = tuple[int, ...]


class InvalidGroupError(ValueError):
    """Raised for factor lists with a modulus below 1."""


def invariant_factors(moduli: Iterable[int]) -> tuple[int, ...]:
    """Invariant factor chain d_1 | d_2 | ... | d_r of a product of cyclic groups.

    Repeatedly replaces a non-dividing pair (a, b) by (gcd, lcm); the multiset
    of orders converges to the unique divisibility chain.  Factors equal to 1
    are dropped, so the trivial group has an empty chain.
    """
    fs = [m for m in moduli if m > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if fs[j] % fs[i] != 0:
                    g = gcd(fs[i], fs[j])
                    fs[i], fs[j] = g, fs[i] * fs[j] // g
                    changed = True
    fs = sorted(f for f in fs if f > 1)
    return tuple(fs)


class Group:
    """Product of cyclic groups Z_{N_1} x ... x Z_{N_k}."""

    __slots__ = ("factors", "order", "exponent", "invariants", "_add_flat")

    def __init__(self, factors: Iterable[int]):
        fs = tuple(int(n) for n in factors)
        if any(n < 1 for n in fs):
            raise InvalidGroupError(f"moduli must be >= 1, got {list(fs)}")
        self.factors = fs
        self.order = prod(fs) if fs else 1
        self.exponent = lcm(*fs) if fs else 1
        self.invariants = invariant_factors(fs)
        self._add_flat: array | None = None

    # -- identity, hashing, repr ------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"Group({list(self.factors)})"

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def zero(self) -> Coords:
        return (0,) * len(self.factors)

    def is_cyclic(self) -> bool:
        return len(self.invariants) <= 1

    # -- element arithmetic ------------------------------------------------

    def reduce(self, coords: Iterable[int]) -> Coords:
        cs = tuple(int(c) for c in coords)
        if len(cs) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} coordinates, got {len(cs)}"
            )
        return tuple(c % n for c, n in zip(cs, self.factors))

    def add(self, a: Coords, b: Coords) -> Coords:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: Coords) -> Coords:
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def scale(self, a: Coords, u: int) -> Coords:
        """u-fold multiple of a (u may be negative)."""
        return tuple((x * u) % n for x, n in zip(a, self.factors))

    def element_order(self, a: Coords) -> int:
        return lcm(*(n // gcd(x, n) for x, n in zip(a, self.factors))) if a else 1

    # -- canonical indexing (row major, last coordinate fastest) -----------

    def elements(self) -> Iterator[Coords]:
        fs = self.factors
        if not fs:
            yield ()
            return
        cur = [0] * len(fs)
        while True:
            yield tuple(cur)
            i = len(fs) - 1
            while i >= 0:
                cur[i] += 1
                if cur[i] < fs[i]:
                    break
                cur[i] = 0
                i -= 1
            else:
                return

    def index(self, a: Coords) -> int:
        idx = 0
        for x, n in zip(a, self.factors):
            idx = idx * n + (x % n)
        return idx

    def element_at(self, idx: int) -> Coords:
        if not 0 <= idx < self.order:
            raise IndexError(f"index {idx} out of range for order {self.order}")
        coords = []
        for n in reversed(self.factors):
            coords.append(idx % n)
            idx //= n
        return tuple(reversed(coords))

    def add_table_flat(self) -> array:
        """Flat |G| x |G| addition table: entry [i * |G| + j] = index(e_i + e_j).

        Cached; this is the layout the autocorrelation kernels consume.
        """
        if self._add_flat is None:
            els = list(self.elements())
            n = self.order
            table = array("i", bytes(4 * n * n))
            for i, a in enumerate(els):
                base = i * n
                for j, b in enumerate(els):
                    table[base + j] = self.index(self.add(a, b))
            self._add_flat = table
        return self._add_flat

    # -- characters ---------------------------------------------------------

    def characters(self) -> Iterator[Coords]:
        """Dual group in the same canonical order as elements()."""
        return self.elements()

    def char_order(self, chi: Coords) -> int:
        if not chi:
            return 1
        return lcm(*(n // gcd(k, n) for k, n in zip(chi, self.factors)))

    def pairing_exponent(self, chi: Coords, x: Coords) -> int:
        """Exponent t with chi(x) = zeta_E ** t for E = self.exponent."""
        e = self.exponent
        t = 0
        for k, xi, n in zip(chi, x, self.factors):
            t += k * xi * (e // n)
        return t % e

    def char_pow(self, chi: Coords, u: int) -> Coords:
        """The character x -> chi(x)**u, i.e. the u-fold multiple of chi."""
        return self.scale(chi, u)


def make_group(factors: Iterable[int]) -> Group:
    """Build a Group from a factor list, validating every modulus."""
    return Group(factors)


def subgroup_generated(group: Group, chars: Iterable[Coords]) -> set[Coords]:
    """Closure of the given characters under the dual group operation."""
    gens = [group.reduce(c) for c in chars]
    seen = {group.zero}
    frontier = [group.zero]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = group.add(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def product_power_set(group: Group, chars: Iterable[Coords], v: int) -> set[Coords]:
    """Products of exactly v characters drawn (with repetition) from chars."""
    if v < 1:
        raise ValueError(f"v must be >= 1, got {v}")
    gens = sorted({group.reduce(c) for c in chars})
    if not gens:
        return set()
    layer = set(gens)
    for _ in range(v - 1):
        layer = {group.add(a, g) for a in layer for g in gens}
    return layer
