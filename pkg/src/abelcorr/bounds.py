"""Completeness-order bounds computed from a spectral support set.

Given the set S of characters where a signal's transform is nonzero, the
autocorrelations of orders 1..3v determine the signal up to translation once
v satisfies a covering condition on S.  This module computes three such
bounds exactly (a covering exponent, an index-2 refinement, and an
invariant-factor formula), reports a classical cited constant for cyclic
groups, and implements the constructive decomposition of residues into sums
of at most three units that underlies the unit-support examples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from abelcorr.groups import Coords, Group, subgroup_generated, product_power_set
from abelcorr.numtheory import crt, is_power_of_two, prime_factors


# -- sums of units -------------------------------------------------------------


@dataclass(frozen=True)
class UnitsDecomposition:
    """A residue written as a sum of units.

    Every residue mod N is a sum of at most two units when N is odd or a
    power of two, and at most three units otherwise.  The decomposition here
    is produced constructively (local solutions per prime power, glued by the
    Chinese remainder theorem), so it doubles as a certificate.
    """

    modulus: int
    target: int
    units: tuple[int, ...]

    def __post_init__(self):
        if sum(self.units) % self.modulus != self.target % self.modulus:
            raise ValueError("unit parts do not sum to the target")
        for u in self.units:
            if gcd(u, self.modulus) != 1:
                raise ValueError(f"{u} is not a unit mod {self.modulus}")
        limit = 2 if (self.modulus % 2 == 1 or is_power_of_two(self.modulus)) else 3
        if not 1 <= len(self.units) <= limit:
            raise ValueError(
                f"expected between 1 and {limit} parts mod {self.modulus}, "
                f"got {len(self.units)}"
            )

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "target": self.target,
            "units": list(self.units),
        }


def _local_two_units(q: int, p: int, c: int) -> tuple[int, int]:
    """c mod p^k as a sum of exactly two units, for odd p.

    Try 1 + (c-1); when c-1 is divisible by p fall back to 2 + (c-2), which
    works because c-1 and c-2 cannot both be multiples of an odd prime
    unless c is, and then c-1 is not.
    """
    for first in (1, 2):
        second = (c - first) % q
        if second % p != 0:
            return first, second
    raise AssertionError(f"no two-unit split of {c} mod {q}")


def _two_units_even(N: int, c: int) -> tuple[int, int]:
    """An even residue mod even N as a sum of exactly two units (CRT glue)."""
    moduli = []
    firsts = []
    seconds = []
    for p, e in prime_factors(N):
        q = p**e
        moduli.append(q)
        if p == 2:
            firsts.append(1 % q)
            seconds.append((c - 1) % q)
        else:
            a, b = _local_two_units(q, p, c % q)
            firsts.append(a)
            seconds.append(b)
    return crt(firsts, moduli), crt(seconds, moduli)


def units_sum_decompose(N: int, c: int) -> UnitsDecomposition:
    """Write c mod N as a sum of units: one if c is a unit, else two, with a
    third needed only when N is even but not a power of two and c is odd."""
    if N < 2:
        raise ValueError(f"modulus must be >= 2, got {N}")
    c = c % N
    if gcd(c, N) == 1:
        return UnitsDecomposition(N, c, (c,))
    if N % 2 == 1:
        firsts = []
        seconds = []
        moduli = []
        for p, e in prime_factors(N):
            q = p**e
            moduli.append(q)
            a, b = _local_two_units(q, p, c % q)
            firsts.append(a)
            seconds.append(b)
        return UnitsDecomposition(N, c, (crt(firsts, moduli), crt(seconds, moduli)))
    if is_power_of_two(N):
        # c is even here (odd residues mod 2^k are units)
        return UnitsDecomposition(N, c, (1, (c - 1) % N))
    if c % 2 == 0:
        return UnitsDecomposition(N, c, _two_units_even(N, c))
    # odd non-unit residue mod mixed even N: peel off a 1, then the even
    # remainder splits into two units
    a, b = _two_units_even(N, (c - 1) % N)
    return UnitsDecomposition(N, c, (1, a, b))


# -- covering exponents --------------------------------------------------------


def min_cover_exponent(group: Group, support: set[Coords] | frozenset[Coords]) -> int:
    """Smallest v such that every element of the subgroup generated by the
    support is a product of at most v support characters."""
    S = {group.reduce(s) for s in support}
    if not S:
        raise ValueError("support must be nonempty")
    target = subgroup_generated(group, S)
    covered = set(S)
    layer = set(S)
    v = 1
    while covered != target:
        layer = {group.add(a, s) for a in layer for s in S}
        covered |= layer
        v += 1
        if v > len(target) + 1:
            raise AssertionError("covering layers failed to stabilize")
    return v


def _is_subgroup(group: Group, subset: frozenset[Coords]) -> bool:
    zero = group.reduce(tuple(0 for _ in group.factors))
    if zero not in subset:
        return False
    return all(group.add(a, b) in subset for a in subset for b in subset)


def index2_exponent(
    group: Group, support: set[Coords] | frozenset[Coords]
) -> int | None:
    """Smallest even v with the v-fold product set an index-2 subgroup of the
    subgroup generated by the support, or None when no even v works.

    Odd v never works (an index-2 subgroup misses some s in S, and then
    s^v would stay outside for odd v while the set must contain it), so only
    even exponents are searched, up to the generated subgroup's size.
    """
    S = frozenset(group.reduce(s) for s in support)
    if not S:
        raise ValueError("support must be nonempty")
    full = subgroup_generated(group, S)
    for v in range(2, len(full) + 1, 2):
        power = product_power_set(group, S, v)
        if 2 * len(power) == len(full) and _is_subgroup(group, power):
            return v
    return None


def invariant_basis_bound(
    group: Group, support: set[Coords] | frozenset[Coords]
) -> int | None:
    """The bound 3(3r - k) from the invariant-factor structure of the group.

    r is the number of nontrivial invariant factors and k counts those that
    are odd or a power of two.  The bound applies only when the support
    contains a full dual basis: r characters whose orders are exactly the
    invariant factors and which together generate the whole dual group.
    Returns None when no such basis lies inside the support.
    """
    S = [group.reduce(s) for s in support]
    invariants = group.invariants
    r = len(invariants)
    k = sum(1 for d in invariants if d % 2 == 1 or is_power_of_two(d))
    if r == 0:
        return 0
    if not _contains_dual_basis(group, S, invariants):
        return None
    return 3 * (3 * r - k)


def _contains_dual_basis(
    group: Group, chars: list[Coords], invariants: tuple[int, ...]
) -> bool:
    candidates = [
        [c for c in set(chars) if group.char_order(c) == d] for d in invariants
    ]
    if any(not cand for cand in candidates):
        return False

    def extend(idx: int, chosen: list[Coords]) -> bool:
        if idx == len(invariants):
            span = subgroup_generated(group, chosen)
            return len(span) == group.order
        for c in candidates[idx]:
            if c in chosen:
                continue
            if extend(idx + 1, chosen + [c]):
                return True
        return False

    return extend(0, [])


def grunbaum_moore_bound(group: Group) -> int | None:
    """Cited completeness order for cyclic groups: 4 when the order is odd,
    6 otherwise.  None for non-cyclic groups (the citation does not apply)."""
    if len(group.invariants) > 1:
        return None
    return 4 if group.order % 2 == 1 else 6


# -- aggregate report ----------------------------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    """All applicable completeness bounds for one support set.

    Bounds derived by this library (ak, index2, basis) are exact consequences
    of the support's structure; the Grünbaum-Moore value is cited from the
    literature, not derived, and is reported separately for that reason.  No
    ordering holds between the bounds in general; each is valid whenever its
    hypothesis holds.
    """

    group: tuple[int, ...]
    support: tuple[Coords, ...]
    generated_subgroup_size: int
    ak_v: int
    ak_bound: int
    index2_v: int | None
    index2_bound: int | None
    basis_bound: int | None
    cited_gm_bound: int | None

    def best_derived(self) -> int:
        options = [self.ak_bound]
        if self.index2_bound is not None:
            options.append(self.index2_bound)
        if self.basis_bound is not None:
            options.append(self.basis_bound)
        return min(options)

    def to_json(self) -> dict:
        return {
            "group": list(self.group),
            "support": [list(c) for c in self.support],
            "generated_subgroup_size": self.generated_subgroup_size,
            "ak": {"v": self.ak_v, "bound": self.ak_bound},
            "index2": {"v": self.index2_v, "bound": self.index2_bound},
            "basis_bound": self.basis_bound,
            "cited_gm_bound": self.cited_gm_bound,
            "best_derived": self.best_derived(),
        }


def bounds_report(group: Group, support: set[Coords] | frozenset[Coords]) -> BoundsReport:
    """Aggregate every applicable bound for the given support."""
    S = sorted({group.reduce(s) for s in support})
    if not S:
        raise ValueError("support must be nonempty")
    ak_v = min_cover_exponent(group, set(S))
    i2_v = index2_exponent(group, set(S))
    return BoundsReport(
        group=group.factors,
        support=tuple(S),
        generated_subgroup_size=len(subgroup_generated(group, S)),
        ak_v=ak_v,
        ak_bound=3 * ak_v,
        index2_v=i2_v,
        index2_bound=None if i2_v is None else 3 * i2_v,
        basis_bound=invariant_basis_bound(group, set(S)),
        cited_gm_bound=grunbaum_moore_bound(group),
    )
