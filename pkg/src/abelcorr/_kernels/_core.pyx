# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 autocorrelation kernels.

Twin of abelcorr._kernels.pure with identical contracts and output ordering.
Callers must route here only when every partial product fits in 64 bits; the
dispatch wrapper enforces that bound.
"""

from cpython cimport array
import array

from math import comb


def autocorr_tensor(long long[::1] values, int[::1] add_flat, int order):
    cdef Py_ssize_t n = values.shape[0]
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order > 60:
        raise ValueError(f"order {order} too large for the compiled kernel")
    cdef Py_ssize_t entries = 1
    cdef int d
    for d in range(order - 1):
        entries *= n
    cdef array.array out_arr = array.clone(array.array('q'), entries, zero=True)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t m, rem, x
    cdef int k
    cdef long long s, p
    cdef Py_ssize_t[60] digits
    if order == 1:
        s = 0
        for x in range(n):
            s += values[x]
        out[0] = s
        return list(out_arr)
    for m in range(entries):
        rem = m
        for k in range(order - 2, -1, -1):
            digits[k] = rem % n
            rem //= n
        s = 0
        for x in range(n):
            p = values[x]
            for k in range(order - 1):
                p *= values[add_flat[x * n + digits[k]]]
            s += p
        out[m] = s
    return list(out_arr)


def autocorr_profile(long long[::1] values, int[::1] add_flat, int max_order):
    cdef Py_ssize_t n = values.shape[0]
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    if max_order > 60:
        raise ValueError(f"max_order {max_order} too large for the compiled kernel")
    cdef Py_ssize_t total = 0
    cdef int k
    for k in range(1, max_order + 1):
        total += comb(n + k - 2, k - 1)
    cdef array.array out_arr = array.clone(array.array('q'), total, zero=True)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t pos = 0, x, i
    cdef int depth, j
    cdef long long s, p
    cdef Py_ssize_t[60] t
    s = 0
    for x in range(n):
        s += values[x]
    out[pos] = s
    pos += 1
    for depth in range(1, max_order):
        # odometer over non-decreasing tuples t[0] <= ... <= t[depth-1]
        for j in range(depth):
            t[j] = 0
        while True:
            s = 0
            for x in range(n):
                p = values[x]
                for j in range(depth):
                    p *= values[add_flat[x * n + t[j]]]
                s += p
            out[pos] = s
            pos += 1
            j = depth - 1
            while j >= 0 and t[j] == n - 1:
                j -= 1
            if j < 0:
                break
            t[j] += 1
            for i in range(j + 1, depth):
                t[i] = t[j]
            # continue
    return list(out_arr)
