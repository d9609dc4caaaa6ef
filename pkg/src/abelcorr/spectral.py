"""Exact Fourier analysis of rational signals on finite abelian groups.

The forward transform is unnormalized, F(chi) = sum_x f(x) * conj(chi(x)),
and inversion carries the 1/|G| factor.  Transform values live in the
cyclotomic field of conductor equal to the group exponent.

The rationality certificate implements the Galois test: a spectrum is the
transform of a rational signal exactly when each value F(e) lies in the
cyclotomic field matching the order of e and the Galois action permutes
values along character orbits, sigma_u(F(e)) = F(e**u).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from abelcorr.cyclotomic import Cyclotomic, _fold
from abelcorr.groups import Coords, Group
from abelcorr.numtheory import lift_unit, units_mod


class NonRationalSpectrumError(ValueError):
    """Raised when an operation requires a spectrum with a rational preimage."""


class Signal:
    """Rational-valued function on a finite abelian group.

    Values are stored densely in canonical element order (row major, last
    coordinate fastest).
    """

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values: Iterable[Fraction | int | str]):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != group.order:
            raise ValueError(
                f"group of order {group.order} needs {group.order} values, "
                f"got {len(vals)}"
            )
        self.group = group
        self.values = vals

    def value(self, x: Coords) -> Fraction:
        return self.values[self.group.index(self.group.reduce(x))]

    def items(self):
        for i, x in enumerate(self.group.elements()):
            yield x, self.values[i]

    def shift(self, a: Coords) -> Signal:
        """The translate x -> f(x + a)."""
        g = self.group
        a = g.reduce(a)
        return Signal(g, tuple(self.values[g.index(g.add(x, a))] for x in g.elements()))

    def reflect(self) -> Signal:
        """The reversal x -> f(-x)."""
        g = self.group
        return Signal(g, tuple(self.values[g.index(g.neg(x))] for x in g.elements()))

    def scale(self, c: Fraction | int) -> Signal:
        c = Fraction(c)
        return Signal(self.group, tuple(v * c for v in self.values))

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def denominator_lcm(self) -> int:
        return lcm(*(v.denominator for v in self.values)) if self.values else 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Signal)
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.group, self.values))

    def __repr__(self) -> str:
        vals = ", ".join(str(v) for v in self.values)
        return f"Signal({self.group!r}, [{vals}])"


class Spectrum:
    """Dense transform values, one per character, in canonical order."""

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values: Sequence[Cyclotomic]):
        if len(values) != group.order:
            raise ValueError(
                f"expected {group.order} character values, got {len(values)}"
            )
        self.group = group
        self.values = tuple(values)

    def value(self, chi: Coords) -> Cyclotomic:
        return self.values[self.group.index(self.group.reduce(chi))]

    def items(self):
        for i, chi in enumerate(self.group.characters()):
            yield chi, self.values[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Spectrum)
            and self.group == other.group
            and self.values == other.values
        )

    def __repr__(self) -> str:
        nonzero = sum(1 for v in self.values if not v.is_zero)
        return f"Spectrum({self.group!r}, {nonzero} nonzero of {len(self.values)})"


def fourier(f: Signal) -> Spectrum:
    """Unnormalized transform F(chi) = sum_x f(x) * conj(chi(x))."""
    g = f.group
    M = g.exponent
    den = f.denominator_lcm()
    ints = [int(v * den) for v in f.values]
    values = []
    elements = list(g.elements())
    for chi in g.characters():
        raw: dict[int, int] = {}
        for i, x in enumerate(elements):
            c = ints[i]
            if c:
                p = g.pairing_exponent(chi, x)
                t = (M - p) % M
                raw[t] = raw.get(t, 0) + c
        coeffs = _fold(M, raw)
        if den != 1:
            coeffs = tuple(c / den for c in coeffs)
        values.append(Cyclotomic(M, coeffs))
    return Spectrum(g, values)


@dataclass(frozen=True)
class InversionResult:
    """Outcome of inverse_fourier: exact values plus rationality information."""

    group: Group
    values: tuple[Cyclotomic, ...]  # one per element, canonical order
    signal: Signal | None  # present iff every value is rational
    witness: tuple[Coords, Cyclotomic] | None  # first non-rational value

    @property
    def is_rational(self) -> bool:
        return self.signal is not None


def inverse_fourier(F: Spectrum) -> InversionResult:
    """f(x) = (1/|G|) sum_chi F(chi) * chi(x), reported exactly.

    Returns the rational Signal when one exists, otherwise the first element
    (in canonical order) whose value is irrational, with that exact value.
    """
    g = F.group
    M = g.exponent
    n = g.order
    den = 1
    for v in F.values:
        for c in v.coeffs:
            den = lcm(den, c.denominator)
    scaled = [[int(c * den) for c in v.coeffs] for v in F.values]
    characters = list(g.characters())
    out_values = []
    witness = None
    for x in g.elements():
        raw: dict[int, int] = {}
        for i, chi in enumerate(characters):
            coeffs = scaled[i]
            p = g.pairing_exponent(chi, x)
            for j, c in enumerate(coeffs):
                if c:
                    t = (j + p) % M
                    raw[t] = raw.get(t, 0) + c
        coeffs_f = _fold(M, raw)
        divisor = den * n
        value = Cyclotomic(M, tuple(c / divisor for c in coeffs_f))
        out_values.append(value)
        if witness is None and not value.is_rational:
            witness = (x, value)
    if witness is None:
        signal = Signal(g, tuple(v.coeffs[0] for v in out_values))
    else:
        signal = None
    return InversionResult(g, tuple(out_values), signal, witness)


def support(F: Spectrum) -> set[Coords]:
    """Characters with nonzero transform value."""
    return {chi for chi, v in F.items() if not v.is_zero}


@dataclass(frozen=True)
class RationalityCertificate:
    """PASS/FAIL outcome of the Galois rationality test.

    On failure, `violation` carries the first offending (character, unit)
    pair in canonical order: either F(e) falls outside the cyclotomic field
    of conductor ord(e) (reported with the unit fixing that subfield), or
    sigma_u(F(e)) != F(e**u).
    """

    passed: bool
    violation: tuple[Coords, int] | None = None
    detail: str = ""


def rationality_check(F: Spectrum) -> RationalityCertificate:
    """Certify that F is the transform of some rational-valued signal."""
    g = F.group
    E = g.exponent
    for chi in g.characters():
        M = g.char_order(chi)
        z = F.value(chi)
        if M < E:
            # membership: z must be fixed by every automorphism fixing Q(zeta_M)
            for u in units_mod(E):
                if u % M == 1 % M and z.galois(u) != z:
                    return RationalityCertificate(
                        False,
                        (chi, u),
                        f"value at {chi} leaves the conductor-{M} subfield",
                    )
        if M <= 2:
            continue  # the orbit condition is vacuous once membership holds
        for u in units_mod(M):
            if u == 1:
                continue
            u_lift = lift_unit(u, M, E)
            if z.galois(u_lift) != F.value(g.char_pow(chi, u)):
                return RationalityCertificate(
                    False,
                    (chi, u),
                    f"Galois action mismatch on the orbit of {chi}",
                )
    return RationalityCertificate(True)


def orbit_vanishing_check(F: Spectrum) -> bool:
    """Verify the support is a union of Galois orbits e -> e**u.

    Requires a spectrum that passes rationality_check; raises
    NonRationalSpectrumError otherwise.
    """
    cert = rationality_check(F)
    if not cert.passed:
        raise NonRationalSpectrumError(
            f"orbit check requires a rational spectrum: {cert.detail}"
        )
    supp = support(F)
    for chi in supp:
        M = F.group.char_order(chi)
        for u in units_mod(M):
            if F.group.char_pow(chi, u) not in supp:
                return False
    return True
