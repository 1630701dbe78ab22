import random

import pytest
from hypothesis import given, settings, strategies as st

from segtract import (
    ConstantScoring,
    CountingScoring,
    InfeasibleError,
    SegmentBounds,
    Segmentation,
    Sequence,
    TableScoring,
    solve_bruteforce,
    solve_dp,
    validate_segmentation,
)
from segtract.instances import random_feasible_bounds, random_table


def test_two_unit_example(two_unit_instance):
    s, f = two_unit_instance
    r = solve_dp(s, f)
    assert r.value == 10
    assert r.segmentation == Segmentation([(1, 1), (2, 2)])


def test_constant_scoring():
    assert solve_dp(Sequence([0] * 7), ConstantScoring()).value == 7


def test_bounded_table_example():
    f = TableScoring({(1, 4): 3, (1, 2): 1, (3, 4): 1}, default=1)
    r = solve_dp(Sequence([0] * 4), f, SegmentBounds(2, 4))
    assert r.value == 3
    assert r.segmentation == Segmentation([(1, 4)])


def test_infeasible():
    with pytest.raises(InfeasibleError):
        solve_dp(Sequence([0] * 5), ConstantScoring(), SegmentBounds(2, 2))


def test_oracle_equivalence_with_witness():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 10)
        s = Sequence([0] * n)
        f = random_table(n, rng, 1, rng.choice([3, 100]))
        bounds = random_feasible_bounds(n, rng)
        dp = solve_dp(s, f, bounds)
        brute = solve_bruteforce(s, f, bounds)
        assert dp.value == brute.value
        # shorter trailing segments on ties reproduce the first optimum in mask order
        assert dp.segmentation == brute.segmentation
        assert validate_segmentation(s, dp.segmentation)
        assert all(bounds.admits(length) for length in dp.segmentation.lengths())


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 9), st.integers(0, 2**32), st.data())
def test_relaxing_bounds_never_hurts(n, seed, data):
    rng = random.Random(seed)
    s = Sequence([0] * n)
    f = random_table(n, rng)
    tight = random_feasible_bounds(n, rng)
    a = data.draw(st.integers(1, tight.min_len))
    b = data.draw(st.integers(tight.max_len, n))
    assert solve_dp(s, f, SegmentBounds(a, b)).value >= solve_dp(s, f, tight).value


@pytest.mark.parametrize("n, bounds", [(30, SegmentBounds()), (30, SegmentBounds(3, 7)), (55, SegmentBounds(5, 5)), (40, SegmentBounds(1, 1))])
def test_scoring_call_budget(n, bounds):
    counter = CountingScoring(ConstantScoring())
    solve_dp(Sequence([0] * n), counter, bounds)
    b = bounds.upper(n)
    assert counter.calls <= n * (b - bounds.min_len + 1)
