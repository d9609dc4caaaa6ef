"""Pure Python autocorrelation kernels.

These operate on integer value vectors indexed by group element and a flat
|G| x |G| addition table of element indices.  Python ints make the results
exact at any magnitude; the compiled twin in _core mirrors the same contracts
for values that fit in 64 bits.
"""

from __future__ import annotations

from typing import Sequence


def autocorr_tensor(values: Sequence[int], add_flat: Sequence[int], order: int) -> list[int]:
    """Flat autocorrelation tensor of the given order.

    Entry at flat index (t_1, ..., t_{order-1}) (row major, first index
    slowest) is sum_x f(x) * f(x+t_1) * ... * f(x+t_{order-1}).
    """
    n = len(values)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order == 1:
        return [sum(values)]
    rows = [[values[add_flat[x * n + t]] for x in range(n)] for t in range(n)]
    out: list[int] = []
    last = order - 1

    def rec(depth: int, partial: list[int]) -> None:
        if depth == last:
            out.append(sum(partial))
            return
        for t in range(n):
            row = rows[t]
            rec(depth + 1, [p * row[x] for x, p in enumerate(partial)])

    # depth counts shift factors already applied on top of the bare f(x)
    for t in range(n):
        row = rows[t]
        rec(1, [v * row[x] for x, v in enumerate(values)])
    return out


def autocorr_profile(values: Sequence[int], add_flat: Sequence[int], max_order: int) -> list[int]:
    """Concatenated multiset profiles for orders 1..max_order.

    The order-n block lists the tensor entries at non-decreasing shift tuples
    t_1 <= ... <= t_{n-1} in lexicographic order.  By the permutation symmetry
    of the tensor this block determines the full order-n tensor, so the
    concatenation is a fingerprint of the autocorrelation data through
    max_order.
    """
    n = len(values)
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    blocks: list[list[int]] = [[sum(values)]]
    if max_order == 1:
        return blocks[0]
    for _ in range(max_order - 1):
        blocks.append([])
    rows = [[values[add_flat[x * n + t]] for x in range(n)] for t in range(n)]
    max_depth = max_order - 1

    def rec(depth: int, start: int, partial: list[int]) -> None:
        for t in range(start, n):
            row = rows[t]
            nxt = [p * row[x] for x, p in enumerate(partial)]
            blocks[depth].append(sum(nxt))
            if depth < max_depth:
                rec(depth + 1, t, nxt)

    rec(1, 0, list(values))
    out: list[int] = []
    for b in blocks:
        out.extend(b)
    return out
