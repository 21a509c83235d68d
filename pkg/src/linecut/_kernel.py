"""Compiled table-fill kernel; falls back gracefully when numba is unavailable.

The kernel mirrors ``solver.fill_level`` exactly (same transition window, same
ascending tie-break) but runs all levels in one call on int64 arrays.  Callers
must prove 64-bit capacity first; ``solver`` does so from the coordinate span
and point count before dispatching here.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on stripped installs
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def fill_all(xs, mult, prefix, n, maximize, want_choices):
    """Fill every level bottom-up; return (last-level values, flat choices, level offsets).

    State (p, r) at level i means: p of the points left of xs[i-1] and r of the
    points collapsed onto xs[i-1] are in the first set.  choices stores, per
    state of each level >= 2, the smallest optimizing count r0 of the previous
    coordinate's copies kept in the first set; it is laid out row-major per
    level starting at offsets[level].
    """
    l = xs.shape[0]
    total = np.int64(0)
    if want_choices:
        for i in range(2, l + 1):
            total += (prefix[i - 1] + 1) * (n - prefix[i - 1] + 1)
    choices = np.empty(total, np.int32)
    offsets = np.zeros(l + 1, np.int64)

    prev = np.zeros((1, n + 1), np.int64)  # level 1: p = 0 only, all values 0
    off = np.int64(0)
    for i in range(2, l + 1):
        big = prefix[i - 1]
        m_prev = mult[i - 2]
        gap = xs[i - 1] - xs[i - 2]
        rowlen = n - big + 1
        offsets[i] = off
        cur = np.empty((big + 1, rowlen), np.int64)
        for p in range(big + 1):
            q = big - p
            lo = m_prev - q
            if lo < 0:
                lo = 0
            hi = m_prev if m_prev < p else p
            row_off = off + p * rowlen
            if maximize:
                for r in range(rowlen):
                    best = prev[p - lo, lo + r]
                    br = lo
                    for r0 in range(lo + 1, hi + 1):
                        v = prev[p - r0, r0 + r]
                        if v > best:
                            best = v
                            br = r0
                    cur[p, r] = gap * (p * (rowlen - 1 - r) + q * r) + best
                    if want_choices:
                        choices[row_off + r] = br
            else:
                for r in range(rowlen):
                    best = prev[p - lo, lo + r]
                    br = lo
                    for r0 in range(lo + 1, hi + 1):
                        v = prev[p - r0, r0 + r]
                        if v < best:
                            best = v
                            br = r0
                    cur[p, r] = gap * (p * (rowlen - 1 - r) + q * r) + best
                    if want_choices:
                        choices[row_off + r] = br
        off += (big + 1) * rowlen
        prev = cur
    return prev, choices, offsets
