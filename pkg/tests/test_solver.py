from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

import linecut.solver as solver
from linecut.errors import InvalidK, UnsupportedProblem
from linecut.model import (
    Instance,
    Objective,
    ProblemSpec,
    compress,
    complement_profile,
    cut_value_naive,
    cut_value_sweep,
)
from linecut.solver import (
    base_level,
    fill_level,
    gap_term,
    kernel_capacity_ok,
    scan_roots,
    solve,
    transition_bounds,
)

from conftest import compressed_instances, instances, wide_coords


def ci_of(*xs: int) -> "CompressedInstance":
    return compress(Instance(tuple(xs)))


ALL_SPECS = lambda n: [ProblemSpec.max_cut()] + [
    ProblemSpec(o, k) for o in Objective for k in range(n + 1)
]


class TestGapTerm:
    def test_examples(self):
        assert gap_term(1, 1, 0, 0, 2) == 2
        assert gap_term(7, 0, 0, 3, 4) == 0
        assert gap_term(2, 2, 1, 1, 3) == 14


class TestTransitionBounds:
    def test_examples(self):
        assert transition_bounds(1, 0, 1) == (1, 1)
        assert transition_bounds(2, 3, 4) == (1, 2)
        assert transition_bounds(0, 5, 3) == (0, 0)

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(1, 30))
    def test_window_matches_enumeration(self, p, q, m_prev):
        lo, hi = transition_bounds(p, q, m_prev)
        feasible = [
            r0
            for r0 in range(m_prev + 1)
            if r0 <= p and (m_prev - r0) <= q
        ]
        if feasible:
            assert (lo, hi) == (feasible[0], feasible[-1])
        else:
            assert lo > hi


class TestFillLevel:
    def test_level2_values(self):
        # Instance {0,1,2}: collapsing to two locations 0 and 1, with two
        # extra copies sitting at 1.
        ci = ci_of(0, 1, 2)
        values, choices = fill_level(ci, 2, base_level(ci.n), Objective.MAX)
        assert values[1][0] == 2
        assert values[0][2] == 2
        assert choices[1][0] == 1

    def test_base_level_zero(self):
        assert base_level(3) == [[0, 0, 0, 0]]

    def test_min_objective_differs(self):
        # Level 2 transitions are forced; the first real choice is at level 3.
        ci = ci_of(0, 1, 2)
        hi = fill_level(ci, 3, fill_level(ci, 2, base_level(ci.n), Objective.MAX)[0],
                        Objective.MAX)[0]
        lo = fill_level(ci, 3, fill_level(ci, 2, base_level(ci.n), Objective.MIN)[0],
                        Objective.MIN)[0]
        assert hi[1][0] == 3
        assert lo[1][0] == 2


class TestScanRoots:
    def test_unconstrained(self):
        ci = ci_of(0, 1, 2)
        tables = solver._fill_python(ci, Objective.MAX, True)
        root, value = scan_roots(ci, tables.top, ProblemSpec.max_cut())
        assert value == 3

    def test_exact_k(self):
        ci = ci_of(0, 1, 2, 3)
        t_max = solver._fill_python(ci, Objective.MAX, True)
        _, v_max = scan_roots(ci, t_max.top, ProblemSpec.max_partition(2))
        assert v_max == 8
        t_min = solver._fill_python(ci, Objective.MIN, True)
        _, v_min = scan_roots(ci, t_min.top, ProblemSpec.min_partition(2))
        assert v_min == 6

    def test_bad_k(self):
        ci = ci_of(0, 1)
        tables = solver._fill_python(ci, Objective.MAX, True)
        with pytest.raises(InvalidK):
            scan_roots(ci, tables.top, ProblemSpec.max_partition(5))


class TestSolve:
    def test_two_points(self):
        sol = solve(ci_of(0, 10), ProblemSpec.max_cut())
        assert sol.value == 10
        # Canonical side choice: the reported first set is the one whose
        # leftmost count is no larger than its complement's.
        assert sol.profile == (0, 1)

    def test_duplicates(self):
        assert solve(ci_of(0, 0, 0, 1), ProblemSpec.max_cut()).value == 3

    def test_min_singleton(self):
        sol = solve(ci_of(0, 1, 2), ProblemSpec.min_partition(1))
        assert sol.value == 2
        assert sol.profile == (0, 1, 0)

    def test_empty_first_set(self):
        sol = solve(ci_of(0, 1, 2, 3), ProblemSpec.max_partition(0))
        assert sol.value == 0
        assert sol.profile == (0, 0, 0, 0)

    def test_single_location(self):
        for spec in ALL_SPECS(3):
            sol = solve(ci_of(5, 5, 5), spec)
            assert sol.value == 0

    def test_min_unconstrained_rejected(self):
        with pytest.raises(UnsupportedProblem):
            solve(ci_of(0, 1), ProblemSpec(Objective.MIN, None))

    def test_value_only_mode(self):
        ci = ci_of(0, 3, 3, 7, 9)
        for spec in (ProblemSpec.max_cut(), ProblemSpec.min_partition(2)):
            full = solve(ci, spec)
            lean = solve(ci, spec, with_assignment=False)
            assert lean.profile is None
            assert lean.value == full.value
            assert lean.k_actual == full.k_actual

    def test_deterministic(self):
        ci = ci_of(0, 0, 2, 5, 5, 9)
        for spec in ALL_SPECS(6):
            assert solve(ci, spec) == solve(ci, spec)

    @given(compressed_instances(max_n=10))
    def test_profile_is_consistent(self, ci):
        for spec in ALL_SPECS(ci.n):
            sol = solve(ci, spec)
            assert cut_value_sweep(ci, sol.profile) == sol.value
            assert cut_value_naive(ci, sol.profile) == sol.value
            assert sum(sol.profile) == sol.k_actual
            if spec.k is not None:
                assert sol.k_actual == spec.k

    @given(compressed_instances(max_n=10))
    def test_side_count_symmetry(self, ci):
        for o in Objective:
            for k in range(ci.n + 1):
                assert (
                    solve(ci, ProblemSpec(o, k)).value
                    == solve(ci, ProblemSpec(o, ci.n - k)).value
                )

    @given(compressed_instances(max_n=10))
    def test_decomposition(self, ci):
        unc = solve(ci, ProblemSpec.max_cut()).value
        best = max(
            solve(ci, ProblemSpec.max_partition(k)).value for k in range(ci.n + 1)
        )
        assert unc == best

    @given(compressed_instances(max_n=10))
    def test_monotone_restriction(self, ci):
        unc = solve(ci, ProblemSpec.max_cut()).value
        for k in range(ci.n + 1):
            assert solve(ci, ProblemSpec.max_partition(k)).value <= unc

    @given(compressed_instances(max_n=10))
    def test_unconstrained_canonical_side(self, ci):
        profile = solve(ci, ProblemSpec.max_cut()).profile
        assert tuple(profile) <= complement_profile(ci, profile)


class TestImplementations:
    @given(compressed_instances(max_n=12))
    def test_python_matches_kernel(self, ci):
        for spec in ALL_SPECS(ci.n):
            a = solve(ci, spec, impl="python")
            b = solve(ci, spec, impl="kernel")
            assert a.value == b.value
            assert a.profile == b.profile

    @given(compressed_instances(max_n=8, coord=wide_coords))
    def test_wide_coords_use_big_ints(self, ci):
        # Extreme coordinates exceed the jit kernel's proven int64 headroom,
        # so the auto path must fall back to exact big-integer arithmetic.
        for spec in (ProblemSpec.max_cut(), ProblemSpec.min_partition(ci.n // 2)):
            auto = solve(ci, spec)
            ref = solve(ci, spec, impl="python")
            assert auto == ref

    def test_capacity_guard(self):
        assert kernel_capacity_ok(ci_of(0, 1, 2))
        big = compress(Instance((-(1 << 40), 1 << 40)))
        assert (
            kernel_capacity_ok(big)
            == ((big.n * big.n // 4 + 1) * (big.xs[-1] - big.xs[0]) <= (1 << 62))
        )

    def test_unknown_impl(self):
        with pytest.raises(ValueError):
            solve(ci_of(0, 1), ProblemSpec.max_cut(), impl="weird")


class TestFaultHook:
    def test_shifted_window_is_detected(self):
        # Breaking the transition lower bound must not go unnoticed: the
        # self-checks inside solve raise on the corrupted recurrence.
        ci = ci_of(0, 0, 0, 1)
        clean = solve(ci, ProblemSpec.max_cut()).value
        solver._fault_transition_lo = True
        try:
            with pytest.raises(Exception):
                got = solve(ci, ProblemSpec.max_cut())
                assert got.value != clean  # either raise or compute wrong
        finally:
            solver._fault_transition_lo = False
        assert solve(ci, ProblemSpec.max_cut()).value == clean
