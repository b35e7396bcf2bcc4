import math

from hypothesis import given, settings
from hypothesis import strategies as st

from eqbreaks import (Breaks, SortedSeries, balanced_greedy, dp_equal_area,
                      dp_weighted, error_abs, greedy_equal_area,
                      greedy_equal_area_2, jenks_breaks, quantile_breaks,
                      weighted_objective)
from eqbreaks.oracle import brute_force_min

pos_weights = st.lists(
    st.floats(min_value=0.0, max_value=1e6, allow_nan=False),
    min_size=1, max_size=16)


@given(pos_weights, st.integers(1, 5))
@settings(max_examples=150, deadline=None)
def test_dp_matches_brute_force(weights, k):
    s = SortedSeries.from_weights(weights)
    _, best = brute_force_min(s, k, "abs")
    got = error_abs(s, dp_equal_area(s, k)) * k
    assert got <= best + 1e-9 * max(1.0, best)


@given(pos_weights, st.integers(1, 5))
@settings(max_examples=100, deadline=None)
def test_dp_dominates_heuristics(weights, k):
    s = SortedSeries.from_weights(weights)
    dp_err = error_abs(s, dp_equal_area(s, k))
    others = [greedy_equal_area(s, k), greedy_equal_area_2(s, k),
              quantile_breaks(s, k), balanced_greedy(s, k)]
    if k <= s.n:
        others.append(jenks_breaks(s, k))
    for b in others:
        assert dp_err <= error_abs(s, b) + 1e-9 * max(1.0, dp_err)


@given(st.lists(st.floats(min_value=0.01, max_value=1e4, allow_nan=False),
                min_size=1, max_size=12),
       st.integers(1, 4),
       st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0]))
@settings(max_examples=80, deadline=None)
def test_dp_weighted_matches_brute_force(weights, k, w):
    s = SortedSeries.from_weights(weights)
    _, best = brute_force_min(s, k, "weighted", w=w)
    got = weighted_objective(s, dp_weighted(s, k, w), w)
    assert got <= best + 1e-9 * max(1.0, best)


@given(st.lists(st.floats(min_value=0.01, max_value=1e4, allow_nan=False),
                min_size=1, max_size=30),
       st.integers(2, 6))
@settings(max_examples=60, deadline=None)
def test_w1_degeneration_balanced_lengths(weights, k):
    s = SortedSeries.from_weights(weights)
    b = dp_weighted(s, k, 1.0)
    edges = b.edges(s.n)
    lens = [edges[i + 1] - edges[i] for i in range(k)]
    assert max(lens) - min(lens) <= 1


@given(st.integers(1, 50).map(float), st.integers(1, 6), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_uniform_weights_reduce_to_quantiles(w, per_chunk, k):
    # k divides n and all weights equal: dp must return the quantile
    # breaks with zero error.  Integer-valued weights keep every prefix
    # comparison exact.
    n = per_chunk * k
    s = SortedSeries.from_weights([w] * n)
    b = dp_equal_area(s, k)
    assert b.indices == quantile_breaks(s, k).indices
    assert error_abs(s, b) == 0.0


@given(pos_weights, st.integers(1, 5),
       st.sampled_from([0.25, 0.5, 2.0, 4.0, 8.0]))
@settings(max_examples=80, deadline=None)
def test_scale_invariance_of_argmin(weights, k, c):
    # power-of-two scaling is exact in binary floating point, so every
    # comparison inside the DP is preserved bit for bit
    s1 = SortedSeries.from_weights(weights)
    s2 = SortedSeries.from_weights([w * c for w in weights])
    assert dp_equal_area(s1, k).indices == dp_equal_area(s2, k).indices


@given(pos_weights)
@settings(max_examples=60, deadline=None)
def test_psum_total(weights):
    s = SortedSeries.from_weights(weights)
    direct = sum(weights)
    assert abs(s.psum(0, s.n) - direct) <= 1e-9 * max(1.0, direct)


@given(pos_weights, st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_determinism(weights, k):
    s = SortedSeries.from_weights(weights)
    assert dp_equal_area(s, k) == dp_equal_area(s, k)
    assert greedy_equal_area(s, k) == greedy_equal_area(s, k)
    assert balanced_greedy(s, k) == balanced_greedy(s, k)
