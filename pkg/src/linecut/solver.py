"""Exact dynamic program for optimal cuts and size-constrained partitions on the line.

The solver walks the distinct coordinates left to right.  A state at level i
fixes how many points strictly left of the level's coordinate go to the first
set (p) and how many of the points at or collapsed onto that coordinate do
(r); the second-set counts q and t follow from the totals.  Collapsing a level
onto its left neighbour changes the cut value by exactly ``gap * (p*t + q*r)``
because interval lengths add along the line, so level values can be filled
bottom-up from a zero base and an optimal partition recovered by backtracking
the stored choices.

Total work is ``sum_i (|left_i|+1) * (n-|left_i|+1) * (m_i+1)``, at most on
the order of ``n^2 * (n + l)``; the bench harness measures the empirical
exponent.  Values are filled either by a compiled int64 kernel (when a proven
bound on the largest possible cut value fits 64 bits) or by a big-integer
reference fill with identical semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernel
from .errors import InternalInconsistency
from .model import (
    CompressedInstance,
    Objective,
    ProblemSpec,
    Solution,
    complement_profile,
    cut_value_sweep,
)

# Largest table value the compiled kernel may ever see; instances whose
# cut-value bound exceeds this use the big-integer fill instead.
_KERNEL_VALUE_LIMIT = 1 << 62

# Test-only hook: shifts the transition window's lower end by one so the
# verify harness can demonstrate that it detects a broken recurrence.
_fault_transition_lo = False


@dataclass(frozen=True)
class DpState:
    """A subproblem state: level index plus first-set counts (p left, r at the level)."""

    level: int
    p: int
    r: int


@dataclass
class DpTables:
    """Fill results: final-level values plus per-state choices for levels >= 2.

    Earlier levels' values are rolled over during the fill; only the last level
    is kept, which is all the root scan needs.  Choices come either as one flat
    int32 array (kernel fill) or as nested lists (reference fill); ``None``
    means the fill ran in value-only mode.
    """

    n: int
    prefix: tuple[int, ...]
    top: object
    choices_flat: Optional[np.ndarray] = None
    offsets: Optional[np.ndarray] = None
    choice_levels: Optional[dict] = None

    @property
    def has_choices(self) -> bool:
        return self.choices_flat is not None or self.choice_levels is not None

    def choice(self, level: int, p: int, r: int) -> int:
        if self.choices_flat is not None:
            rowlen = self.n - self.prefix[level - 1] + 1
            return int(self.choices_flat[int(self.offsets[level]) + p * rowlen + r])
        if self.choice_levels is not None:
            return self.choice_levels[level][p][r]
        raise InternalInconsistency("value-only tables carry no backtracking choices")


def gap_term(gap: int, p: int, q: int, r: int, t: int) -> int:
    """Exact cut-value change when a level collapses onto its left neighbour.

    p/q count first/second-set points left of the gap, r/t first/second-set
    points at or beyond it; each of the p*t + q*r crossing pairs stretches by
    the gap length.
    """
    return gap * (p * t + q * r)


def transition_bounds(p: int, q: int, m_prev: int) -> tuple[int, int]:
    """Feasible counts r0 of the previous coordinate's copies in the first set.

    Of its m_prev copies, r0 join the first set (so r0 <= p) and the rest the
    second (so m_prev - r0 <= q).  Returns (lo, hi); the range is empty
    (lo > hi) only if p + q < m_prev, which cannot happen for well-formed
    levels.
    """
    lo = m_prev - q
    if lo < 0:
        lo = 0
    if _fault_transition_lo:
        lo += 1
    hi = p if p < m_prev else m_prev
    return lo, hi


def base_level(n: int) -> list[list[int]]:
    """Level-1 value table: single state p = 0, one column per r = 0..n, all zero."""
    return [[0] * (n + 1)]


def fill_level(
    ci: CompressedInstance,
    level: int,
    prev: list[list[int]],
    objective: Objective,
) -> tuple[list[list[int]], list[list[int]]]:
    """Reference fill of one level (>= 2) from the previous level's values.

    Returns ``(values, choices)`` where ``values[p][r]`` is the optimal cut
    value of the level's subproblem and ``choices[p][r]`` the smallest
    optimizing r0.  Exact for arbitrarily large coordinates (Python ints).
    """
    if not 2 <= level <= ci.l:
        raise InternalInconsistency(f"level {level} outside 2..{ci.l}")
    big = ci.prefix[level - 1]
    prev_big = ci.prefix[level - 2]
    if len(prev) != prev_big + 1 or len(prev[0]) != ci.n - prev_big + 1:
        raise InternalInconsistency("previous level table has wrong shape")
    m_prev = ci.mult[level - 2]
    gap = ci.xs[level - 1] - ci.xs[level - 2]
    rowlen = ci.n - big + 1
    maximize = objective is Objective.MAX

    values = []
    choices = []
    for p in range(big + 1):
        q = big - p
        lo, hi = transition_bounds(p, q, m_prev)
        if lo > hi:
            raise InternalInconsistency(
                f"empty transition window at level {level}, state p={p}, q={q}"
            )
        vrow = [0] * rowlen
        crow = [0] * rowlen
        for r in range(rowlen):
            best = prev[p - lo][lo + r]
            br = lo
            for r0 in range(lo + 1, hi + 1):
                v = prev[p - r0][r0 + r]
                if (v > best) if maximize else (v < best):
                    best = v
                    br = r0
            vrow[r] = gap_term(gap, p, q, r, rowlen - 1 - r) + best
            crow[r] = br
        values.append(vrow)
        choices.append(crow)
    return values, choices


def _fill_python(ci, objective, want_choices):
    prev = base_level(ci.n)
    choice_levels = {} if want_choices else None
    for level in range(2, ci.l + 1):
        prev, choices = fill_level(ci, level, prev, objective)
        if want_choices:
            choice_levels[level] = choices
    return DpTables(n=ci.n, prefix=ci.prefix, top=prev, choice_levels=choice_levels)


def _fill_kernel(ci, objective, want_choices):
    xs = np.asarray(ci.xs, dtype=np.int64)
    mult = np.asarray(ci.mult, dtype=np.int64)
    prefix = np.asarray(ci.prefix, dtype=np.int64)
    top, choices, offsets = _kernel.fill_all(
        xs, mult, prefix, ci.n, objective is Objective.MAX, want_choices
    )
    if not want_choices:
        choices = offsets = None
    return DpTables(
        n=ci.n, prefix=ci.prefix, top=top, choices_flat=choices, offsets=offsets
    )


def kernel_capacity_ok(ci: CompressedInstance) -> bool:
    """True when every table value provably fits the compiled kernel's int64."""
    span = ci.xs[-1] - ci.xs[0]
    return (ci.n * ci.n // 4 + 1) * span <= _KERNEL_VALUE_LIMIT


def scan_roots(
    ci: CompressedInstance, top: object, spec: ProblemSpec
) -> tuple[DpState, int]:
    """Pick the optimal final-level state.

    Unconstrained: scan every state.  Exact size k: scan the states with
    p + r = k.  Ties break to the lexicographically smallest (p, r).
    """
    spec.validate_for(ci.n)
    level = ci.l
    big = ci.prefix[level - 1]
    rowlen = ci.n - big + 1
    maximize = spec.objective is Objective.MAX

    if isinstance(top, np.ndarray):
        if spec.k is None:
            flat = int(np.argmax(top) if maximize else np.argmin(top))
            p, r = divmod(flat, rowlen)
            return DpState(level, p, r), int(top[p, r])
        k = spec.k
        p_lo = max(0, k - (rowlen - 1))
        p_hi = min(big, k)
        ps = np.arange(p_lo, p_hi + 1)
        diag = top[ps, k - ps]
        idx = int(np.argmax(diag) if maximize else np.argmin(diag))
        p = p_lo + idx
        return DpState(level, p, k - p), int(diag[idx])

    best = None
    best_state = None
    if spec.k is None:
        candidates = ((p, r) for p in range(big + 1) for r in range(rowlen))
    else:
        p_lo = max(0, spec.k - (rowlen - 1))
        p_hi = min(big, spec.k)
        candidates = ((p, spec.k - p) for p in range(p_lo, p_hi + 1))
    for p, r in candidates:
        v = top[p][r]
        if best is None or ((v > best) if maximize else (v < best)):
            best = v
            best_state = DpState(level, p, r)
    if best_state is None:
        raise InternalInconsistency("no feasible root state")
    return best_state, best


def reconstruct(
    ci: CompressedInstance, tables: DpTables, root: DpState
) -> tuple[int, ...]:
    """Walk the stored choices from a root state back to level 1.

    The root's r gives the last coordinate's first-set count; each step down
    reads r0 from the choice table and moves to state (p - r0, r0 + r), which
    keeps p + r invariant, so the profile sums to root.p + root.r.
    """
    profile = [0] * ci.l
    p, r = root.p, root.r
    profile[ci.l - 1] = r
    for level in range(ci.l, 1, -1):
        r0 = tables.choice(level, p, r)
        lo, hi = transition_bounds(p, ci.prefix[level - 1] - p, ci.mult[level - 2])
        if not lo <= r0 <= hi:
            raise InternalInconsistency(
                f"stored choice {r0} outside window [{lo}, {hi}] at level {level}"
            )
        profile[level - 2] = r0
        p, r = p - r0, r0 + r
    if p != 0:
        raise InternalInconsistency("backtracking did not land on the base level")
    return tuple(profile)


def _canonical_unconstrained(ci, profile):
    # The two sides are interchangeable; report the lexicographically smaller
    # of the profile and its complement so output never depends on internals.
    comp = complement_profile(ci, profile)
    return comp if comp < profile else profile


def solve(
    ci: CompressedInstance,
    spec: ProblemSpec,
    *,
    with_assignment: bool = True,
    impl: str = "auto",
) -> Solution:
    """Solve the cut problem exactly.

    ``with_assignment=False`` skips choice storage and reconstruction, cutting
    memory from one small integer per state to two rolling value levels.
    ``impl`` is "auto", "kernel" or "python"; auto prefers the compiled kernel
    whenever its 64-bit capacity is provably sufficient.
    """
    spec.validate_for(ci.n)
    use = impl
    if use == "auto":
        fast_ok = _kernel.HAVE_NUMBA and kernel_capacity_ok(ci) and not _fault_transition_lo
        use = "kernel" if fast_ok else "python"
    if use == "kernel":
        tables = _fill_kernel(ci, spec.objective, with_assignment)
    elif use == "python":
        tables = _fill_python(ci, spec.objective, with_assignment)
    else:
        raise ValueError(f"unknown impl {impl!r}")

    root, value = scan_roots(ci, tables.top, spec)
    if not with_assignment:
        return Solution(ci=ci, spec=spec, value=value, k_actual=root.p + root.r)

    profile = reconstruct(ci, tables, root)
    if sum(profile) != root.p + root.r:
        raise InternalInconsistency("reconstructed profile size disagrees with root")
    if spec.k is not None and sum(profile) != spec.k:
        raise InternalInconsistency("reconstructed profile misses the size constraint")
    if cut_value_sweep(ci, profile) != value:
        raise InternalInconsistency("reconstructed profile does not evaluate to the optimum")
    if spec.k is None:
        profile = _canonical_unconstrained(ci, profile)
    return Solution(
        ci=ci, spec=spec, value=value, k_actual=sum(profile), profile=profile
    )
