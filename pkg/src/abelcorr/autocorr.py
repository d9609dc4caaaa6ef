"""Higher-order autocorrelation tensors and order-by-order comparison.

The order-n autocorrelation of a signal f on G is the function on (n-1)-tuples
of group elements

    corr_n(f)(t_1, ..., t_{n-1}) = sum_x f(x) * f(x+t_1) * ... * f(x+t_{n-1}).

Its Fourier side factors through products of transform values: on an n-tuple
of characters whose product is trivial the value is F(chi_1) * ... * F(chi_n),
and those products over identity tuples carry exactly the same information as
the tensor.  Comparison of two signals therefore walks identity tuples over
the union of the supports instead of materializing |G|**(n-1) entries.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from abelcorr import _kernels
from abelcorr.cyclotomic import Cyclotomic
from abelcorr.groups import Coords, Group
from abelcorr.spectral import Signal, Spectrum, fourier, support

DEFAULT_ENTRY_CAP = 10**8
_CAP_ENV = "AUTOCORR_MEM_CAP"


class TensorCapError(RuntimeError):
    """Raised when a dense tensor would exceed the entry cap."""


class GroupMismatchError(ValueError):
    """Raised when two signals live on different groups."""


class InvalidTupleError(ValueError):
    """Raised for character tuples whose product is not the trivial character."""


def _entry_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"bad {_CAP_ENV} value {env!r}") from exc
    return DEFAULT_ENTRY_CAP


class AutocorrTensor:
    """Dense order-n autocorrelation tensor, flat row-major storage."""

    __slots__ = ("group", "order", "entries")

    def __init__(self, group: Group, order: int, entries: Sequence[Fraction]):
        expected = group.order ** (order - 1)
        if len(entries) != expected:
            raise ValueError(f"order-{order} tensor needs {expected} entries")
        self.group = group
        self.order = order
        self.entries = tuple(entries)

    def value(self, shifts: Sequence[Coords]) -> Fraction:
        """Entry at a tuple of order-1 shift elements."""
        if len(shifts) != self.order - 1:
            raise InvalidTupleError(
                f"order-{self.order} tensor takes {self.order - 1} shifts"
            )
        g = self.group
        idx = 0
        for t in shifts:
            idx = idx * g.order + g.index(g.reduce(t))
        return self.entries[idx]

    def items(self) -> Iterator[tuple[tuple[Coords, ...], Fraction]]:
        g = self.group
        els = list(g.elements())
        k = self.order - 1
        if k == 0:
            yield (), self.entries[0]
            return
        idxs = [0] * k
        for entry in self.entries:
            yield tuple(els[i] for i in idxs), entry
            j = k - 1
            while j >= 0:
                idxs[j] += 1
                if idxs[j] < len(els):
                    break
                idxs[j] = 0
                j -= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AutocorrTensor)
            and self.group == other.group
            and self.order == other.order
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"AutocorrTensor(order={self.order}, group={self.group!r})"


def autocorr_direct(f: Signal, order: int, cap: int | None = None) -> AutocorrTensor:
    """Materialize the dense order-n tensor by direct summation.

    Memory is guarded: |G|**(order-1) entries must not exceed the cap
    (argument, else the AUTOCORR_MEM_CAP environment variable, else 10**8).
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    g = f.group
    entries = g.order ** (order - 1)
    cap_val = _entry_cap(cap)
    if entries > cap_val:
        raise TensorCapError(
            f"order-{order} tensor on a group of order {g.order} needs "
            f"{entries} entries, over the cap of {cap_val}; use the "
            f"Fourier-side comparison (equal_through_order) instead"
        )
    den = f.denominator_lcm()
    ints = [int(v * den) for v in f.values]
    raw = _kernels.autocorr_tensor(ints, g.add_table_flat(), order)
    scale = Fraction(1, den**order)
    if den == 1:
        values = [Fraction(v) for v in raw]
    else:
        values = [v * scale for v in raw]
    return AutocorrTensor(g, order, values)


def autocorr_profile(f: Signal, max_order: int) -> tuple[Fraction, ...]:
    """Multiset fingerprint of the tensors for orders 1..max_order.

    Lists tensor entries at non-decreasing shift tuples only; permutation
    symmetry of the tensor makes this equivalent to the full tensors.
    """
    g = f.group
    den = f.denominator_lcm()
    ints = [int(v * den) for v in f.values]
    raw = _kernels.autocorr_profile(ints, g.add_table_flat(), max_order)
    if den == 1:
        return tuple(Fraction(v) for v in raw)
    # block for order n scales by den**n
    out: list[Fraction] = []
    pos = 0
    block = 1
    for order in range(1, max_order + 1):
        scale = Fraction(1, den**order)
        for _ in range(block):
            out.append(raw[pos] * scale)
            pos += 1
        block = block * (g.order + order - 1) // order
    return tuple(out)


def autocorr_fourier(F: Spectrum, chars: Sequence[Coords]) -> Cyclotomic:
    """Product F(chi_1) * ... * F(chi_n) over an identity tuple of characters."""
    g = F.group
    if not chars:
        raise InvalidTupleError("need at least one character")
    total = g.zero
    for chi in chars:
        total = g.add(total, g.reduce(chi))
    if total != g.zero:
        raise InvalidTupleError(
            f"character tuple product is {total}, not the trivial character"
        )
    prod = Cyclotomic.rational(1, g.exponent)
    for chi in chars:
        prod = prod * F.value(chi)
    return prod


def identity_tuples(
    group: Group, n: int, restrict: Iterable[Coords] | None = None
) -> Iterator[tuple[Coords, ...]]:
    """Non-decreasing n-tuples of characters with trivial product.

    Tuples are canonical representatives of the permutation classes, ordered
    lexicographically by character coordinates.  `restrict` limits characters
    to the given set (typically a spectrum support).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if restrict is None:
        chars = sorted(group.characters())
    else:
        chars = sorted({group.reduce(c) for c in restrict})
    char_pos = {c: i for i, c in enumerate(chars)}
    if n == 1:
        if group.zero in char_pos:
            yield (group.zero,)
        return

    prefix: list[Coords] = []

    def rec(start: int, total: Coords) -> Iterator[tuple[Coords, ...]]:
        if len(prefix) == n - 1:
            last = group.neg(total)
            pos = char_pos.get(last)
            if pos is not None and pos >= start:
                yield tuple(prefix) + (last,)
            return
        for i in range(start, len(chars)):
            prefix.append(chars[i])
            yield from rec(i, group.add(total, chars[i]))
            prefix.pop()

    yield from rec(0, group.zero)


def is_translate(f: Signal, g: Signal) -> Coords | None:
    """Smallest offset a (canonical order) with f(x) = g(x + a), else None."""
    if f.group != g.group:
        raise GroupMismatchError(f"groups differ: {f.group!r} vs {g.group!r}")
    grp = f.group
    for a in grp.elements():
        if f == g.shift(a):
            return a
    return None


@dataclass(frozen=True)
class CompareReport:
    """Order-by-order verdict from equal_through_order."""

    group: Group
    max_order: int
    orders_equal: tuple[bool, ...]  # index k -> order k+1
    first_difference_order: int | None
    witness: tuple[Coords, ...] | None  # identity tuple separating the signals
    translate_offset: Coords | None

    @property
    def all_equal(self) -> bool:
        return self.first_difference_order is None

    def equal_through(self) -> int:
        """Largest order n with agreement at every order <= n."""
        if self.first_difference_order is None:
            return self.max_order
        return self.first_difference_order - 1

    def order_equal(self, order: int) -> bool:
        return self.orders_equal[order - 1]

    def to_json(self) -> dict:
        return {
            "group": list(self.group.factors),
            "max_order": self.max_order,
            "orders": {
                str(i + 1): eq for i, eq in enumerate(self.orders_equal)
            },
            "first_difference_order": self.first_difference_order,
            "witness": [list(c) for c in self.witness] if self.witness else None,
            "translate_offset": list(self.translate_offset)
            if self.translate_offset is not None
            else None,
            "equal_through": self.equal_through(),
        }


def _order_difference(
    F: Spectrum,
    G: Spectrum,
    n: int,
    chars: list[Coords],
    char_pos: dict[Coords, int],
) -> tuple[Coords, ...] | None:
    """First identity tuple of size n where the product values differ."""
    grp = F.group
    one = Cyclotomic.rational(1, grp.exponent)
    f_vals = [F.value(c) for c in chars]
    g_vals = [G.value(c) for c in chars]

    if n == 1:
        pos = char_pos.get(grp.zero)
        if pos is not None and f_vals[pos] != g_vals[pos]:
            return (grp.zero,)
        return None

    prefix: list[Coords] = []

    def rec(start: int, total: Coords, pf: Cyclotomic, pg: Cyclotomic):
        if pf.is_zero and pg.is_zero:
            return None  # every completion is 0 on both sides
        if len(prefix) == n - 1:
            last = grp.neg(total)
            pos = char_pos.get(last)
            if pos is not None and pos >= start:
                if pf * f_vals[pos] != pg * g_vals[pos]:
                    return tuple(prefix) + (last,)
            return None
        for i in range(start, len(chars)):
            prefix.append(chars[i])
            hit = rec(
                i, grp.add(total, chars[i]), pf * f_vals[i], pg * g_vals[i]
            )
            if hit is not None:
                return hit
            prefix.pop()
        return None

    return rec(0, grp.zero, one, one)


def equal_through_order(f: Signal, g: Signal, max_order: int) -> CompareReport:
    """Compare autocorrelations of two signals for every order up to max_order.

    Works on the Fourier side: for each order the identity tuples over the
    union of the two supports are enumerated and the products of transform
    values compared.  This is exactly tensor equality order by order, without
    the |G|**(n-1) memory, and it reports the first separating tuple in
    canonical order.
    """
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    if f.group != g.group:
        raise GroupMismatchError(f"groups differ: {f.group!r} vs {g.group!r}")
    F, G = fourier(f), fourier(g)
    chars = sorted(support(F) | support(G))
    char_pos = {c: i for i, c in enumerate(chars)}
    flags = []
    first_diff = None
    witness = None
    for n in range(1, max_order + 1):
        hit = _order_difference(F, G, n, chars, char_pos)
        flags.append(hit is None)
        if hit is not None and first_diff is None:
            first_diff = n
            witness = hit
    return CompareReport(
        group=f.group,
        max_order=max_order,
        orders_equal=tuple(flags),
        first_difference_order=first_diff,
        witness=witness,
        translate_offset=is_translate(f, g),
    )
