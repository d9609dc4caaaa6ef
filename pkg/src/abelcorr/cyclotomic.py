"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A value is a rational coordinate vector over the power basis
``1, zeta, ..., zeta**(phi(M)-1)`` reduced modulo the M-th cyclotomic
polynomial.  The reduced form is unique, so equality is plain coefficient
comparison and every predicate downstream (vanishing, rationality, membership
in a subfield) is decidable.

Conventions:

* rational scalars are ``fractions.Fraction`` everywhere;
* Galois automorphisms act by ``zeta -> zeta**u`` for units u mod M, and
  complex conjugation is ``u = -1``;
* mixed-conductor arithmetic lifts both operands to the lcm of their
  conductors via ``zeta_M = zeta_L ** (L // M)``;
* hashing canonicalizes to the smallest conductor containing the value, so
  equal values hash equally even when stored in different fields.

The module keeps a cached table of the reduced power-basis vectors of
``zeta**t`` for each conductor; multiplication, Galois action, embedding and
the Fourier layer above all reduce through that one table.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from abelcorr.numtheory import divisors, units_mod


class ConductorError(ValueError):
    """Raised when a value cannot be moved to the requested conductor."""


class InvalidAutomorphismError(ValueError):
    """Raised for zeta -> zeta**u with gcd(u, M) != 1."""


def _polydiv_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; the division must be exact (used only on x^M - 1).
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Coefficients of the M-th cyclotomic polynomial, ascending degree."""
    if M < 1:
        raise ValueError(f"conductor must be >= 1, got {M}")
    if M == 1:
        return (-1, 1)
    poly = [-1] + [0] * (M - 1) + [1]
    for d in divisors(M):
        if d < M:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _zeta_powers(M: int) -> tuple[tuple[int, ...], ...]:
    """Reduced power-basis vector of zeta_M**t for t = 0..M-1 (integer rows)."""
    phi_poly = cyclotomic_polynomial(M)
    deg = len(phi_poly) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(M):
        rows.append(tuple(cur))
        carry = cur[deg - 1]
        nxt = [0] + cur[: deg - 1]
        if carry:
            for j in range(deg):
                nxt[j] -= carry * phi_poly[j]
        cur = nxt
    return tuple(rows)


def degree(M: int) -> int:
    """Degree of Q(zeta_M) over Q, i.e. phi(M)."""
    return len(cyclotomic_polynomial(M)) - 1


_ZERO = Fraction(0)


def _fold(M: int, raw: dict[int, Fraction | int]) -> tuple[Fraction, ...]:
    """Reduce a sparse power vector {exponent: coeff} into the power basis."""
    rows = _zeta_powers(M)
    deg = len(rows[0])
    acc = [_ZERO] * deg
    for t, c in raw.items():
        if not c:
            continue
        row = rows[t % M]
        for j, r in enumerate(row):
            if r:
                acc[j] += c * r
    return tuple(Fraction(v) for v in acc)


class Cyclotomic:
    """An element of Q(zeta_M) in reduced power-basis form."""

    __slots__ = ("conductor", "coeffs", "_canon")

    def __init__(self, conductor: int, coeffs: Iterable[Fraction | int]):
        cs = tuple(Fraction(c) for c in coeffs)
        deg = degree(conductor)
        if len(cs) != deg:
            raise ValueError(
                f"conductor {conductor} needs {deg} coefficients, got {len(cs)}"
            )
        self.conductor = conductor
        self.coeffs = cs
        self._canon: tuple[int, tuple[Fraction, ...]] | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_powers(cls, conductor: int, raw: dict[int, Fraction | int]) -> Cyclotomic:
        """Build from a sparse {exponent: rational} power vector."""
        return cls(conductor, _fold(conductor, raw))

    @classmethod
    def rational(cls, value: Fraction | int, conductor: int = 1) -> Cyclotomic:
        coeffs = [Fraction(value)] + [_ZERO] * (degree(conductor) - 1)
        return cls(conductor, coeffs)

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- conductor movement ---------------------------------------------------

    def embed(self, L: int) -> Cyclotomic:
        """The same value viewed in Q(zeta_L); L must be a multiple of M."""
        M = self.conductor
        if L == M:
            return self
        if L % M != 0:
            raise ConductorError(f"cannot embed conductor {M} into {L}")
        q = L // M
        raw = {j * q: c for j, c in enumerate(self.coeffs) if c}
        return Cyclotomic(L, _fold(L, raw))

    def _pair(self, other: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if self.conductor == other.conductor:
            return self, other
        L = lcm(self.conductor, other.conductor)
        return self.embed(L), other.embed(L)

    def in_subfield(self, d: int) -> bool:
        """True when the value lies in Q(zeta_d) (d dividing the conductor)."""
        M = self.conductor
        if M % d != 0:
            raise ConductorError(f"{d} does not divide conductor {M}")
        if d == M:
            return True
        return all(
            self.galois(u) == self for u in units_mod(M) if u % d == 1 % d
        )

    def minimal_conductor(self) -> int:
        for d in divisors(self.conductor):
            if self.in_subfield(d):
                return d
        return self.conductor

    def descend(self, d: int) -> Cyclotomic:
        """Rewrite the value in Q(zeta_d); raises if it does not lie there."""
        M = self.conductor
        if M % d != 0:
            raise ConductorError(f"{d} does not divide conductor {M}")
        if d == M:
            return self
        rows = _zeta_powers(M)
        q = M // d
        cols = [rows[(k * q) % M] for k in range(degree(d))]
        sol = _solve_columns(cols, self.coeffs)
        if sol is None:
            raise ConductorError(f"{self!r} does not lie in Q(zeta_{d})")
        return Cyclotomic(d, sol)

    def canonical(self) -> Cyclotomic:
        """The value at its minimal conductor."""
        d, coeffs = self._canonical_key()
        return Cyclotomic(d, coeffs)

    def _canonical_key(self) -> tuple[int, tuple[Fraction, ...]]:
        if self._canon is None:
            small = self.descend(self.minimal_conductor())
            self._canon = (small.conductor, small.coeffs)
        return self._canon

    # -- ring and field operations -------------------------------------------

    def __add__(self, other: Cyclotomic | Fraction | int) -> Cyclotomic:
        other = _coerce(other, self.conductor)
        a, b = self._pair(other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Cyclotomic | Fraction | int) -> Cyclotomic:
        other = _coerce(other, self.conductor)
        a, b = self._pair(other)
        return Cyclotomic(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: Cyclotomic | Fraction | int) -> Cyclotomic:
        return _coerce(other, self.conductor) - self

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __mul__(self, other: Cyclotomic | Fraction | int) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclotomic.rational(0, self.conductor)
            return Cyclotomic(self.conductor, tuple(c * other for c in self.coeffs))
        a, b = self._pair(other)
        M = a.conductor
        ca, cb = a.coeffs, b.coeffs
        # integer fast path: products of integer vectors stay integer
        if all(c.denominator == 1 for c in ca) and all(c.denominator == 1 for c in cb):
            ia = [c.numerator for c in ca]
            ib = [c.numerator for c in cb]
            raw_len = len(ia) + len(ib) - 1
            raw = [0] * raw_len
            for i, x in enumerate(ia):
                if x:
                    for j, y in enumerate(ib):
                        if y:
                            raw[i + j] += x * y
            return Cyclotomic(M, _fold(M, dict(enumerate(raw))))
        raw_f: dict[int, Fraction] = {}
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        raw_f[i + j] = raw_f.get(i + j, _ZERO) + x * y
        return Cyclotomic(M, _fold(M, raw_f))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Cyclotomic:
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Cyclotomic:
        """Field inverse via the extended Euclidean algorithm mod Phi_M."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        M = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(M)]
        a = list(self.coeffs)
        inv = _poly_modinv(a, phi)
        return Cyclotomic(M, _fold(M, dict(enumerate(inv))))

    def __truediv__(self, other: Cyclotomic | Fraction | int) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        return self * other.inverse()

    def __rtruediv__(self, other: Fraction | int) -> Cyclotomic:
        return _coerce(other, self.conductor) / self

    # -- Galois action ---------------------------------------------------------

    def galois(self, u: int) -> Cyclotomic:
        """Image under zeta -> zeta**u; u must be a unit mod the conductor."""
        M = self.conductor
        uu = u % M
        if M > 1 and gcd(uu, M) != 1:
            raise InvalidAutomorphismError(f"{u} is not a unit mod {M}")
        raw = {(j * uu) % M: c for j, c in enumerate(self.coeffs) if c}
        return Cyclotomic(M, _fold(M, raw))

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1)

    def norm_squared(self) -> Fraction:
        """|z|^2 = z * conj(z) as a Fraction.

        Raises ValueError when the squared modulus is irrational, which can
        happen once the maximal real subfield is larger than the rationals
        (conductor 12 and up). Conductors dividing 4 or 6 are always safe.
        """
        mod = (self * self.conjugate()).canonical()
        if not mod.is_rational:
            raise ValueError(f"|{self}|^2 lies in a real subfield, not in the rationals")
        return mod.as_rational()

    # -- comparisons and hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    # -- rendering ----------------------------------------------------------------

    def to_complex(self) -> complex:
        M = self.conductor
        z = cmath.exp(2j * cmath.pi / M)
        return sum(float(c) * z**j for j, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coeffs[0])
        sym = f"z{self.conductor}"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}{sym}" if j == 1 else f"{mag}{sym}^{j}"
                parts.append(f"-{term}" if c < 0 else (f"+{term}" if parts else term))
        return "".join(parts) if parts else "0"


def _coerce(value: Cyclotomic | Fraction | int, conductor: int) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.rational(value, conductor)


def _solve_columns(
    cols: list[tuple[int, ...]], target: tuple[Fraction, ...]
) -> tuple[Fraction, ...] | None:
    """Solve sum_k x_k * cols[k] == target over Q, or None if inconsistent."""
    nrows = len(target)
    ncols = len(cols)
    mat = [[Fraction(cols[k][i]) for k in range(ncols)] + [target[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    # inconsistent if a zero row has nonzero rhs
    for i in range(r, nrows):
        if mat[i][ncols]:
            return None
    sol = [_ZERO] * ncols
    for row, c in enumerate(pivots):
        sol[c] = mat[row][ncols]
    # verify (cheap, guards against underdetermined systems)
    for i in range(nrows):
        if sum(sol[k] * cols[k][i] for k in range(ncols)) != target[i]:
            return None
    return tuple(sol)


def _poly_modinv(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a mod the irreducible monic polynomial `modulus`, over Q."""

    def trim(p: list[Fraction]) -> list[Fraction]:
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_poly(num: list[Fraction], den: list[Fraction]):
        num = num[:]
        q = [_ZERO] * max(1, len(num) - len(den) + 1)
        inv_lead = 1 / den[-1]
        for i in range(len(num) - 1, len(den) - 2, -1):
            c = num[i] * inv_lead
            if c:
                q[i - len(den) + 1] = c
                for j, d in enumerate(den):
                    num[i - len(den) + 1 + j] -= c * d
        return trim(q), trim(num)

    r0, r1 = trim(modulus[:]), trim(a[:])
    s0, s1 = [_ZERO], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q * s1
        prod = [_ZERO] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    prod[i + j] += qc * sc
        nxt = [
            (s0[i] if i < len(s0) else _ZERO) - (prod[i] if i < len(prod) else _ZERO)
            for i in range(max(len(s0), len(prod), 1))
        ]
        s0, s1 = s1, trim(nxt)
    # r0 is the gcd, a nonzero constant since the modulus is irreducible
    if len(r0) != 1:
        raise ArithmeticError("modulus not coprime with operand")
    scale = 1 / r0[0]
    return [c * scale for c in s0]


@dataclass(frozen=True)
class GaloisAuto:
    """The automorphism zeta_M -> zeta_M**unit of Q(zeta_M)."""

    conductor: int
    unit: int

    def __post_init__(self):
        if self.conductor < 1:
            raise InvalidAutomorphismError(f"conductor must be >= 1, got {self.conductor}")
        if gcd(self.unit % self.conductor, self.conductor) != 1 and self.conductor > 1:
            raise InvalidAutomorphismError(
                f"{self.unit} is not a unit mod {self.conductor}"
            )

    def __call__(self, z: Cyclotomic) -> Cyclotomic:
        return galois_apply(self, z)


def galois_apply(sigma: GaloisAuto, z: Cyclotomic) -> Cyclotomic:
    """Apply sigma to z; the conductors must match."""
    if sigma.conductor != z.conductor:
        raise ConductorError(
            f"automorphism of conductor {sigma.conductor} applied to value of "
            f"conductor {z.conductor}"
        )
    return z.galois(sigma.unit)


def root_of_unity(M: int, k: int = 1) -> Cyclotomic:
    """zeta_M ** k in reduced form."""
    rows = _zeta_powers(M)
    return Cyclotomic(M, rows[k % M])


def sqrt_minus_three() -> Cyclotomic:
    """The square root of -3 inside Q(zeta_6), namely 2*zeta_6 - 1."""
    return root_of_unity(6) * 2 - 1
