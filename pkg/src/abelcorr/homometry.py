"""Construction and classification of homometric signal pairs.

Two rational signals are homometric through order n when their
autocorrelations agree at every order up to n.  On Z_6 the interesting pairs
(equal through order 5, separated at order 6, not translates) are completely
characterized by four spectral conditions; this module implements that
classifier, an exact generator that produces such pairs from solutions of the
norm form x^2 + x*y + y^2, a lift of the same spectral data to Z_30, and an
exhaustive brute-force search used to validate completeness claims.

The generator works in the Eisenstein-style ring Z[w], w a primitive sixth
root of unity, where x + y*w has squared modulus x^2 + x*y + y^2.  Unit
multiples of a solution correspond to translates of the produced signal and
complex conjugation to its reflection, so solution orbits are classified by
their sixth powers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from abelcorr.autocorr import equal_through_order
from abelcorr.cyclotomic import Cyclotomic
from abelcorr.groups import Group
from abelcorr.numtheory import divisor_count, prime_factors
from abelcorr.spectral import (
    Signal,
    Spectrum,
    fourier,
    inverse_fourier,
    rationality_check,
)
from abelcorr import _kernels

SEARCH_CAP = 10**7


class GenerationError(ValueError):
    """Raised when a requested pair family cannot exist."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class LiftError(ValueError):
    """Raised on lift preconditions: modulus mismatch or equal sixth powers."""


class SearchCapError(RuntimeError):
    """Raised when a brute-force enumeration would exceed the signal cap."""


# -- norm form ---------------------------------------------------------------


@dataclass(frozen=True)
class NormFormSolution:
    x: int
    y: int

    @property
    def norm(self) -> int:
        return self.x * self.x + self.x * self.y + self.y * self.y

    def to_cyclotomic(self) -> Cyclotomic:
        """x + y*w as an element of Q(zeta_6)."""
        return Cyclotomic(6, (Fraction(self.x), Fraction(self.y)))


def norm_form_solutions(L: int) -> list[NormFormSolution]:
    """All integer pairs with x^2 + x*y + y^2 == L, sorted lexicographically."""
    if L < 0:
        raise ValueError(f"norm must be >= 0, got {L}")
    if L == 0:
        return [NormFormSolution(0, 0)]
    bound = isqrt(4 * L // 3) + 1
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x * x + x * y + y * y == L:
                out.append(NormFormSolution(x, y))
    return out


def norm_form_count(L: int) -> int:
    """Solution count of x^2 + x*y + y^2 == L from the factorization of L.

    Write L = 3^a * r * s with r the part built from primes 1 mod 3 and s the
    part from primes 2 mod 3.  The count is 6 * d(r) when s is a perfect
    square and 0 otherwise.
    """
    if L < 0:
        raise ValueError(f"norm must be >= 0, got {L}")
    if L == 0:
        return 1
    r = 1
    for p, e in prime_factors(L):
        if p % 3 == 1:
            r *= p**e
        elif p % 3 == 2 and e % 2 == 1:
            return 0
    return 6 * divisor_count(r)


def _orbit(x: int, y: int) -> list[tuple[int, int]]:
    """The six unit multiples of x + y*w; multiplication by w is (x,y) -> (-y, x+y)."""
    out = []
    cx, cy = x, y
    for _ in range(6):
        out.append((cx, cy))
        cx, cy = -cy, cx + cy
    return out


def _orbit_representatives(sols: Sequence[NormFormSolution]) -> list[NormFormSolution]:
    """One representative per unit orbit: the lexicographically largest pair."""
    seen: set[tuple[int, int]] = set()
    reps = []
    for s in sols:
        if (s.x, s.y) in seen:
            continue
        orbit = _orbit(s.x, s.y)
        seen.update(orbit)
        rx, ry = max(orbit)
        reps.append(NormFormSolution(rx, ry))
    return sorted(reps, key=lambda s: (s.x, s.y), reverse=True)


def _orbit_has_real(rep: NormFormSolution) -> bool:
    return any(y == 0 for _, y in _orbit(rep.x, rep.y))


# -- classification on Z_6 ----------------------------------------------------


@dataclass(frozen=True)
class HomometryVerdict:
    """Spectral test for maximal homometric pairs on Z_6.

    A pair of rational signals on Z_6 shares all autocorrelations through
    order 5 while differing at order 6 exactly when the four conditions hold:
    equal means, both transforms vanishing at the characters of index 2, 3
    and 4, equal modulus at the generator character, and distinct sixth
    powers there.
    """

    mean_match: bool
    mid_characters_vanish: bool
    modulus_match: bool
    sixth_powers_differ: bool
    f_mean: Fraction
    g_mean: Fraction
    f_primary: Cyclotomic
    g_primary: Cyclotomic

    @property
    def is_homometric_pair(self) -> bool:
        return (
            self.mean_match
            and self.mid_characters_vanish
            and self.modulus_match
            and self.sixth_powers_differ
        )

    def to_json(self) -> dict:
        return {
            "is_homometric_pair": self.is_homometric_pair,
            "conditions": {
                "mean_match": self.mean_match,
                "mid_characters_vanish": self.mid_characters_vanish,
                "modulus_match": self.modulus_match,
                "sixth_powers_differ": self.sixth_powers_differ,
            },
            "witnesses": {
                "f_mean": str(self.f_mean),
                "g_mean": str(self.g_mean),
                "f_primary": self.f_primary.to_json(),
                "g_primary": self.g_primary.to_json(),
            },
        }


def classify_z6_pair(f: Signal, g: Signal) -> HomometryVerdict:
    """Evaluate the four spectral conditions for signals on Z_6."""
    if f.group.factors != (6,) or g.group.factors != (6,):
        raise ValueError("the classifier is specific to signals on Z_6")
    F, G = fourier(f), fourier(g)
    zf, zg = F.value((1,)), G.value((1,))
    return HomometryVerdict(
        mean_match=F.value((0,)) == G.value((0,)),
        mid_characters_vanish=all(
            F.value((k,)).is_zero and G.value((k,)).is_zero for k in (2, 3, 4)
        ),
        modulus_match=zf * zf.conjugate() == zg * zg.conjugate(),
        sixth_powers_differ=zf**6 != zg**6,
        f_mean=F.value((0,)).as_rational(),
        g_mean=G.value((0,)).as_rational(),
        f_primary=zf,
        g_primary=zg,
    )


# -- generators ----------------------------------------------------------------


@dataclass(frozen=True)
class GeneratedPair:
    """A constructed homometric pair with its provenance.

    `coverage` records what the construction guarantees: "classification" for
    the Z_6 family (every maximal pair arises this way) and "family" for the
    Z_30 lift (a family of examples, not a classification).
    """

    f: Signal
    g: Signal
    f_primary: Cyclotomic
    g_primary: Cyclotomic
    multiplier: int
    source_r: int | None
    f_solution: tuple[int, int] | None
    g_solution: tuple[int, int] | None
    solution_norm: int | None
    is_reflection_pair: bool
    is_translate_pair: bool
    coverage: str

    def to_json(self) -> dict:
        return {
            "group": list(self.f.group.factors),
            "f": [str(v) for v in self.f.values],
            "g": [str(v) for v in self.g.values],
            "f_primary": self.f_primary.to_json(),
            "g_primary": self.g_primary.to_json(),
            "multiplier": self.multiplier,
            "source_r": self.source_r,
            "f_solution": list(self.f_solution) if self.f_solution else None,
            "g_solution": list(self.g_solution) if self.g_solution else None,
            "solution_norm": self.solution_norm,
            "is_reflection_pair": self.is_reflection_pair,
            "is_translate_pair": self.is_translate_pair,
            "coverage": self.coverage,
        }


def translation_canonical(f: Signal) -> Signal:
    """The lexicographically largest translate of f (canonical orbit form)."""
    best = max(f.shift(a).values for a in f.group.elements())
    return Signal(f.group, best)


def _signal_from_z6_value(z: Cyclotomic, mean: Fraction) -> Signal:
    group = Group([6])
    zero = Cyclotomic.rational(0, 6)
    values = [
        Cyclotomic.rational(mean, 6),
        z,
        zero,
        zero,
        zero,
        z.conjugate(),
    ]
    result = inverse_fourier(Spectrum(group, values))
    if result.signal is None:
        raise ArithmeticError("conjugate-symmetric spectrum inverted to a non-rational signal")
    return result.signal


def generate_z6_pairs(r: int, mean: Fraction | int = 0) -> list[GeneratedPair]:
    """All maximal homometric pairs on Z_6 derived from the parameter r.

    Enumerates solutions of x^2 + x*y + y^2 = r**2, groups them into unit
    orbits (equivalently: classes with equal sixth powers), and pairs distinct
    orbit representatives.  Each pair is inverted to a rational signal pair,
    cleared to integer values by one shared multiplier, and canonicalized by
    translation.  When an orbit contains a real solution it takes the `g`
    slot, matching the convention that `g` is the reflection-symmetric
    partner.  Pairs of conjugate orbits are flagged as reflections.
    """
    if not isinstance(r, int) or r <= 1:
        raise ValueError(f"r must be an integer > 1, got {r!r}")
    mean = Fraction(mean)
    factors = prime_factors(r)
    for p, e in factors:
        if p % 3 == 2 and e % 2 == 1:
            raise GenerationError(
                "no-solutions",
                f"r = {r} has the prime {p} (2 mod 3) to an odd power, so the "
                f"norm form has no primitive solutions to pair",
            )
    if all(p == 3 for p, _ in factors):
        raise GenerationError(
            "trivial-orbit",
            f"r = {r} is a power of 3; all norm-form solutions lie in one "
            f"unit orbit, so no inequivalent pairs exist",
        )
    reps = _orbit_representatives(norm_form_solutions(r * r))
    pairs = []
    for a, b in itertools.combinations(reps, 2):
        if _orbit_has_real(b) and not _orbit_has_real(a):
            f_rep, g_rep = a, b
        elif _orbit_has_real(a) and not _orbit_has_real(b):
            f_rep, g_rep = b, a
        else:
            f_rep, g_rep = a, b
        pair = _build_z6_pair(f_rep, g_rep, mean, r)
        pairs.append(pair)
    return pairs


def _build_z6_pair(
    f_rep: NormFormSolution, g_rep: NormFormSolution, mean: Fraction, r: int
) -> GeneratedPair:
    zf, zg = f_rep.to_cyclotomic(), g_rep.to_cyclotomic()
    f_raw = _signal_from_z6_value(zf, mean)
    g_raw = _signal_from_z6_value(zg, mean)
    mult = lcm(f_raw.denominator_lcm(), g_raw.denominator_lcm())
    f = translation_canonical(f_raw.scale(mult))
    g = translation_canonical(g_raw.scale(mult))
    verdict = classify_z6_pair(f, g)
    if not verdict.is_homometric_pair:
        raise ArithmeticError(
            f"internal check failed: generated pair from {f_rep}, {g_rep} "
            f"is not maximally homometric"
        )
    conj_f = zf.conjugate()
    return GeneratedPair(
        f=f,
        g=g,
        f_primary=verdict.f_primary,
        g_primary=verdict.g_primary,
        multiplier=mult,
        source_r=r,
        f_solution=(f_rep.x, f_rep.y),
        g_solution=(g_rep.x, g_rep.y),
        solution_norm=r * r,
        is_reflection_pair=conj_f**6 == zg**6,
        is_translate_pair=False,
        coverage="classification",
    )


# -- lift to Z_30 ----------------------------------------------------------------


_Z30_PLUS = (1, 7, 13, 19)  # units 1 mod 6: carry z
_Z30_MINUS = (11, 17, 23, 29)  # units 5 mod 6: carry conj(z)


def lift_to_z30(
    z_f: Cyclotomic | int | Fraction,
    z_g: Cyclotomic | int | Fraction,
    mean: Fraction | int = 0,
    verify: bool = True,
) -> GeneratedPair:
    """Lift a Z_6 spectral pair to Z_30 along the unit characters.

    Each signal is supported on the eight unit characters of Z_30: the value
    z sits on the characters congruent to 1 mod 6 and conj(z) on those
    congruent to 5 mod 6.  The resulting rational pair agrees through order 5
    and separates at order 6.  Preconditions: equal modulus and distinct
    sixth powers (identical inputs are allowed and produce the degenerate
    equal pair, flagged as translates).
    """
    zf = _as_z6(z_f)
    zg = _as_z6(z_g)
    mean = Fraction(mean)
    if zf * zf.conjugate() != zg * zg.conjugate():
        raise LiftError("lift requires |z_f| == |z_g| exactly")
    translate_pair = zf == zg
    if not translate_pair and zf**6 == zg**6:
        raise LiftError(
            "z_f and z_g differ by a sixth root of unity; the lifted signals "
            "would be translates, not a separated pair"
        )
    f_raw = _signal_from_z30_value(zf, mean)
    g_raw = _signal_from_z30_value(zg, mean)
    mult = lcm(f_raw.denominator_lcm(), g_raw.denominator_lcm())
    f = translation_canonical(f_raw.scale(mult))
    g = translation_canonical(g_raw.scale(mult))
    reflection = (not translate_pair) and zf.conjugate() ** 6 == zg**6
    if verify:
        for s in (f, g):
            cert = rationality_check(fourier(s))
            if not cert.passed:
                raise ArithmeticError("lifted signal failed the rationality test")
        if not translate_pair:
            report = equal_through_order(f, g, 6)
            if report.equal_through() != 5 or report.first_difference_order != 6:
                raise ArithmeticError(
                    "lifted pair does not separate exactly at order 6"
                )
    return GeneratedPair(
        f=f,
        g=g,
        f_primary=fourier(f).value((1,)),
        g_primary=fourier(g).value((1,)),
        multiplier=mult,
        source_r=None,
        f_solution=None,
        g_solution=None,
        solution_norm=None,
        is_reflection_pair=reflection,
        is_translate_pair=translate_pair,
        coverage="family",
    )


def _as_z6(z: Cyclotomic | int | Fraction) -> Cyclotomic:
    if not isinstance(z, Cyclotomic):
        return Cyclotomic.rational(Fraction(z), 6)
    if 6 % z.conductor == 0:
        return z.embed(6)
    raise LiftError(f"lift inputs must lie in the conductor-6 field, got {z!r}")


def _signal_from_z30_value(z: Cyclotomic, mean: Fraction) -> Signal:
    group = Group([30])
    zero = Cyclotomic.rational(0, 30)
    z30 = z.embed(30)
    conj30 = z.conjugate().embed(30)
    values = [zero] * 30
    values[0] = Cyclotomic.rational(mean, 30)
    for u in _Z30_PLUS:
        values[u] = z30
    for u in _Z30_MINUS:
        values[u] = conj30
    result = inverse_fourier(Spectrum(group, values))
    if result.signal is None:
        raise ArithmeticError("conjugate-symmetric spectrum inverted to a non-rational signal")
    return result.signal


# -- exhaustive search ---------------------------------------------------------


def brute_force_search(
    group: Group, bound: int, max_order: int, threads: int = 1
) -> list[tuple[Signal, Signal]]:
    """Exhaustively find non-translate integer signal pairs sharing all
    autocorrelations through max_order.

    Enumerates every signal with values in [-bound, bound], canonicalizes
    modulo translation (so each orbit is fingerprinted once), and collides
    the profiles over sorted shift tuples at orders 1..max_order (the
    autocorrelation tensors are shift-permutation symmetric, so profile
    equality is pointwise tensor equality).  Returns the colliding
    pairs of canonical representatives in deterministic order.  The number of
    raw signals (2*bound+1)**|G| is capped at 10**7.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    n = group.order
    width = 2 * bound + 1
    total = width**n
    if total > SEARCH_CAP:
        raise SearchCapError(
            f"{total} signals exceed the enumeration cap of {SEARCH_CAP}; "
            f"shrink the bound or the group"
        )
    add_flat = group.add_table_flat()
    perms = [[add_flat[x * n + a] for x in range(n)] for a in range(n)]
    value_range = list(range(-bound, bound + 1))

    def scan(first: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        out = []
        if n == 1:
            candidates = [(first,)]
        else:
            candidates = (
                (first,) + rest
                for rest in itertools.product(value_range, repeat=n - 1)
            )
        for vals in candidates:
            canonical = max(tuple(vals[p[x]] for x in range(n)) for p in perms)
            if vals != canonical:
                continue
            profile = tuple(_kernels.autocorr_profile(list(vals), add_flat, max_order))
            out.append((profile, vals))
        return out

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(scan, value_range))
    else:
        chunks = [scan(first) for first in value_range]

    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for chunk in chunks:
        for profile, vals in chunk:
            buckets.setdefault(profile, []).append(vals)
    pairs = []
    for members in buckets.values():
        if len(members) < 2:
            continue
        for va, vb in itertools.combinations(members, 2):
            pairs.append((Signal(group, va), Signal(group, vb)))
    return pairs
