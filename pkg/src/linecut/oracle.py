"""Independent ground-truth solvers for small instances.

``oracle_solve`` enumerates every count profile outright and shares no code
with the level recurrence (it evaluates through ``cut_value_sweep``, which is
itself cross-checked against the pairwise definition).  ``best_threshold``
scores the n+1 sorted-prefix cuts as a cheap baseline bound.  Neither does any
pruning; being obviously correct is the point.
"""

from __future__ import annotations

import itertools
import math

from .errors import TooLargeForOracle
from .model import (
    CompressedInstance,
    Objective,
    ProblemSpec,
    Solution,
    cut_value_sweep,
)

# Cap on the number of enumerated profiles, prod(mult[i] + 1).
DEFAULT_PROFILE_CAP = 1 << 22


def profile_space(ci: CompressedInstance) -> int:
    """Number of distinct count profiles of the instance."""
    return math.prod(m + 1 for m in ci.mult)


def oracle_solve(
    ci: CompressedInstance, spec: ProblemSpec, cap: int = DEFAULT_PROFILE_CAP
) -> Solution:
    """Exhaustive optimum over all count profiles; lexicographically smallest winner.

    Enumerating profiles instead of per-point labels shrinks the search from
    2**n to prod(mult[i] + 1), so heavily duplicated instances stay in reach.
    """
    spec.validate_for(ci.n)
    size = profile_space(ci)
    if size > cap:
        raise TooLargeForOracle(f"{size} profiles exceed the cap of {cap}")

    maximize = spec.objective is Objective.MAX
    best = None
    best_profile = None
    for profile in itertools.product(*(range(m + 1) for m in ci.mult)):
        if spec.k is not None and sum(profile) != spec.k:
            continue
        v = cut_value_sweep(ci, profile)
        if best is None or ((v > best) if maximize else (v < best)):
            best = v
            best_profile = profile
    # Some profile always fits the constraint (0 <= k <= n was validated).
    return Solution(
        ci=ci, spec=spec, value=best, k_actual=sum(best_profile), profile=best_profile
    )


def _prefix_profile(ci: CompressedInstance, j: int) -> tuple[int, ...]:
    """Profile whose first set is the j smallest points of the sorted multiset."""
    remaining = j
    counts = []
    for m in ci.mult:
        take = min(m, remaining)
        counts.append(take)
        remaining -= take
    return tuple(counts)


def best_threshold(ci: CompressedInstance, spec: ProblemSpec) -> Solution:
    """Best cut whose first set is a prefix of the sorted multiset.

    Under an exact size k only the k-prefix is feasible; unconstrained, all
    n+1 prefixes are scored and ties go to the smallest prefix.  A baseline
    bound only: thresholds are not optimal in general.
    """
    spec.validate_for(ci.n)
    if spec.k is not None:
        js = (spec.k,)
    else:
        js = range(ci.n + 1)
    maximize = spec.objective is Objective.MAX
    best = None
    best_profile = None
    for j in js:
        profile = _prefix_profile(ci, j)
        v = cut_value_sweep(ci, profile)
        if best is None or ((v > best) if maximize else (v < best)):
            best = v
            best_profile = profile
    return Solution(
        ci=ci, spec=spec, value=best, k_actual=sum(best_profile), profile=best_profile
    )
