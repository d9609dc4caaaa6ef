"""Kernel dispatch: compiled int64 fast path with an exact pure fallback.

The compiled backend is used when it imported successfully, the environment
does not force the pure path (ABELCORR_FORCE_PURE=1), and every intermediate
product provably fits in 64 bits.  Otherwise the pure Python kernels run on
arbitrary-precision ints.  Both backends produce identical outputs on shared
inputs; the test suite cross-checks them.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from abelcorr._kernels import pure

try:
    from abelcorr._kernels import _core
except ImportError:  # compiled extension unavailable; stay on the pure path
    _core = None

if os.environ.get("ABELCORR_FORCE_PURE") == "1":
    _core = None

BACKEND = "compiled" if _core is not None else "pure"

# Keep a safety margin below 2**63: the accumulator adds n products of
# `order` values, each bounded by max|f|**order.
_INT64_LIMIT = 2**62


def fits_int64(values: Sequence[int], order: int) -> bool:
    m = max((abs(v) for v in values), default=0)
    return len(values) * (max(m, 1) ** order) < _INT64_LIMIT


def autocorr_tensor(values: Sequence[int], add_flat, order: int) -> list[int]:
    if _core is not None and fits_int64(values, order):
        return _core.autocorr_tensor(array("q", values), add_flat, order)
    return pure.autocorr_tensor(values, add_flat, order)


def autocorr_profile(values: Sequence[int], add_flat, max_order: int) -> list[int]:
    if _core is not None and fits_int64(values, max_order):
        return _core.autocorr_profile(array("q", values), add_flat, max_order)
    return pure.autocorr_profile(values, add_flat, max_order)
