"""Break-finding algorithms and the objectives they optimize.

All functions are pure: they take a :class:`SortedSeries` and return a
:class:`Breaks` or a number, never mutating their inputs.
"""
from __future__ import annotations

from bisect import bisect_left

import numpy as np

from . import kernels
from .series import Breaks, MethodSpec, PartitionStats, SortedSeries


def _require_nonempty(series: SortedSeries):
    if series.n == 0:
        raise ValueError("series must contain at least one item")


def _chunk_sums(series: SortedSeries, breaks: Breaks) -> list[float]:
    edges = breaks.edges(series.n)
    return [series.psum(edges[i], edges[i + 1]) for i in range(breaks.k)]


def error_abs(series: SortedSeries, breaks: Breaks) -> float:
    """Mean absolute deviation of chunk weight sums from total/k."""
    k = breaks.k
    avg = series.total / k
    return sum(abs(s - avg) for s in _chunk_sums(series, breaks)) / k


def weighted_objective(series: SortedSeries, breaks: Breaks, w: float) -> float:
    """Blend of squared area error (weight 1-w) and squared length error (w).

    Area terms are normalized by the total weight (== k * avg), length terms
    by n.
    """
    if not 0.0 <= w <= 1.0:
        raise ValueError("w must be in [0, 1]")
    total = series.total
    if total <= 0:
        raise ValueError("degenerate input: total weight is zero")
    n = series.n
    k = breaks.k
    avg = total / k
    avg_len = n / k
    edges = breaks.edges(n)
    area_term = 0.0
    len_term = 0.0
    for i in range(k):
        area_term += ((series.psum(edges[i], edges[i + 1]) - avg) / total) ** 2
        len_term += (((edges[i + 1] - edges[i]) - avg_len) / n) ** 2
    return (1.0 - w) * area_term + w * len_term


def partition_stats(series: SortedSeries, breaks: Breaks,
                    w: float | None = None) -> PartitionStats:
    edges = breaks.edges(series.n)
    sums = tuple(_chunk_sums(series, breaks))
    lens = tuple(edges[i + 1] - edges[i] for i in range(breaks.k))
    return PartitionStats(
        chunk_sums=sums,
        chunk_lens=lens,
        avg=series.total / breaks.k,
        avg_len=series.n / breaks.k,
        error_abs=error_abs(series, breaks),
        weighted_objective=(None if w is None
                            else weighted_objective(series, breaks, w)),
    )


def greedy_equal_area(series: SortedSeries, k: int) -> Breaks:
    """Greedy pass: a chunk closes as soon as its own sum reaches total/k.

    A break landing exactly on n would only delimit a trailing empty chunk,
    so it is dropped; the result may carry fewer than k-1 breaks.
    """
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    prefix = series.prefix
    n = series.n
    avg = series.total / k
    breaks: list[int] = []
    start = 0
    while len(breaks) < k - 1:
        b = bisect_left(prefix, prefix[start] + avg, start + 1)
        if b >= n:
            break
        breaks.append(b)
        start = b
    return Breaks(tuple(breaks), k)


def greedy_equal_area_2(series: SortedSeries, k: int) -> Breaks:
    """Modified greedy: chunk m closes once the overall running total
    reaches m * total/k, preventing the overshoot from accumulating."""
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    prefix = series.prefix
    n = series.n
    avg = series.total / k
    breaks: list[int] = []
    prev = 0
    for m in range(1, k):
        b = bisect_left(prefix, avg * m, prev + 1)
        if b >= n:
            break
        breaks.append(b)
        prev = b
    return Breaks(tuple(breaks), k)


def find_last_break_candidates(series: SortedSeries, m: int,
                               avg: float) -> tuple[int, int]:
    """Two candidate positions for the final break of the first m items.

    Scans backward from m-1 accumulating weights; the first index whose
    running sum exceeds avg is the boundary the optimum sits next to.
    Returns (0, 1) when the whole prefix sums to no more than avg.
    """
    if not 0 <= m <= series.n:
        raise ValueError(f"m must be in [0, {series.n}]")
    s = 0.0
    for i in range(m - 1, -1, -1):
        s += series.weights[i]
        if s > avg:
            return (i, i + 1)
    return (0, 1)


def dp_equal_area(series: SortedSeries, k: int) -> Breaks:
    """Optimal equal-area breaks minimizing sum |chunk sum - avg|, O(n*k).

    The table fill lives in the kernel backend (compiled when available);
    this wrapper reconstructs the break list via the stored last-break
    parent pointers.
    """
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return Breaks((), 1)
    table = kernels.dp_equal_area_table(series.prefix, k)
    indices = [0] * (k - 1)
    m = series.n
    for b in range(k - 1, 0, -1):
        m = int(table[b - 1][m])
        indices[b - 1] = m
    return Breaks(tuple(indices), k)


def dp_weighted(series: SortedSeries, k: int, w: float) -> Breaks:
    """Optimal breaks for the blended area/length objective, O(n^2 * k).

    The two-candidate shortcut of the equal-area DP does not apply once
    lengths enter the objective, so every break position 0..m is scanned;
    first-found minimum wins ties (argmin over ascending positions).
    w=0 is the squared equal-area criterion, w=1 pure length balancing.
    """
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0.0 <= w <= 1.0:
        raise ValueError("w must be in [0, 1]")
    if series.total <= 0:
        raise ValueError("degenerate input: total weight is zero")
    if k == 1:
        return Breaks((), 1)
    n = series.n
    p = np.asarray(series.prefix, dtype=np.float64)
    total = p[n]
    avg = total / k
    avg_len = n / k
    idx = np.arange(n + 1)
    prev = (1.0 - w) * ((p - avg) / total) ** 2 + w * ((idx - avg_len) / n) ** 2
    table = np.zeros((n + 1, k - 1), dtype=np.int64)
    for b in range(1, k):
        cur = np.empty(n + 1)
        for m in range(n + 1):
            cost = (prev[: m + 1]
                    + (1.0 - w) * ((p[m] - p[: m + 1] - avg) / total) ** 2
                    + w * (((m - idx[: m + 1]) - avg_len) / n) ** 2)
            j = int(np.argmin(cost))
            cur[m] = cost[j]
            table[m, b - 1] = j
        prev = cur
    indices = [0] * (k - 1)
    m = n
    for b in range(k - 1, 0, -1):
        m = int(table[m, b - 1])
        indices[b - 1] = m
    return Breaks(tuple(indices), k)


def balanced_greedy(series: SortedSeries, k: int, u_bound: float = 2.0,
                    l_bound: float = 0.5) -> Breaks:
    """Greedy equal-area that also bounds chunk lengths.

    A chunk closes when (sum >= avg and len >= l_bound*avg_len) or
    len >= u_bound*avg_len or sum >= u_bound*avg.  After each break the
    targets are recomputed over the remaining suffix and remaining chunk
    count, so running out of elements simply yields fewer breaks.
    """
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not l_bound < u_bound:
        raise ValueError("l_bound must be < u_bound")
    n = series.n
    weights = series.weights
    breaks: list[int] = []
    start = 0
    remaining = k
    while remaining > 1 and start < n:
        avg = series.psum(start, n) / remaining
        avg_len = (n - start) / remaining
        s = 0.0
        length = 0
        closed = False
        for i in range(start, n):
            length += 1
            s += weights[i]
            if ((s >= avg and length >= l_bound * avg_len)
                    or length >= u_bound * avg_len
                    or s >= u_bound * avg):
                if i + 1 < n:
                    breaks.append(i + 1)
                start = i + 1
                remaining -= 1
                closed = True
                break
        if not closed:
            break
    return Breaks(tuple(breaks), k)


def quantile_breaks(series: SortedSeries, k: int) -> Breaks:
    """Equal-length breaks: break i = round(i*n/k), half up."""
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    n = series.n
    return Breaks(tuple((2 * i * n + k) // (2 * k) for i in range(1, k)), k)


def equal_interval_breaks(series: SortedSeries, k: int) -> Breaks:
    """Breaks at equal spans of the value range.

    Threshold j = min + j*(max-min)/k; break j is the first index whose
    value reaches it.  An all-equal series degenerates to one non-empty
    leading class (all breaks at n).
    """
    _require_nonempty(series)
    if k < 1:
        raise ValueError("k must be >= 1")
    values = series.values
    vmin, vmax = values[0], values[-1]
    if vmax == vmin:
        return Breaks((series.n,) * (k - 1), k)
    breaks = []
    for j in range(1, k):
        t = vmin + j * (vmax - vmin) / k
        breaks.append(bisect_left(values, t))
    return Breaks(tuple(breaks), k)


def jenks_breaks(series: SortedSeries, k: int) -> Breaks:
    """Optimal univariate natural breaks: minimize within-class sum of
    squared deviations from class means (Fisher-style DP, O(n^2 * k)).

    Classes are non-empty, so k must not exceed n.
    """
    _require_nonempty(series)
    n = series.n
    if not 1 <= k <= n:
        raise ValueError(f"jenks requires 1 <= k <= n, got k={k}, n={n}")
    if k == 1:
        return Breaks((), 1)
    v = np.asarray(series.values, dtype=np.float64)
    s1 = np.concatenate(([0.0], np.cumsum(v)))
    s2 = np.concatenate(([0.0], np.cumsum(v * v)))

    def sse_to(m, starts):
        # within-class SSE of values[starts:m] for a vector of starts < m
        cnt = m - starts
        tot = s1[m] - s1[starts]
        return (s2[m] - s2[starts]) - tot * tot / cnt

    inf = float("inf")
    prev = np.full(n + 1, inf)
    ms = np.arange(1, n + 1)
    prev[1:] = s2[ms] - s1[ms] * s1[ms] / ms  # one class covering [0, m)
    table = np.zeros((n + 1, k - 1), dtype=np.int64)
    for c in range(2, k + 1):
        cur = np.full(n + 1, inf)
        for m in range(c, n + 1):
            starts = np.arange(c - 1, m)
            cost = prev[starts] + sse_to(m, starts)
            j = int(np.argmin(cost))
            cur[m] = cost[j]
            table[m, c - 2] = starts[j]
        prev = cur
    indices = [0] * (k - 1)
    m = n
    for c in range(k, 1, -1):
        m = int(table[m, c - 2])
        indices[c - 2] = m
    return Breaks(tuple(indices), k)


def snap_ties(series: SortedSeries, breaks: Breaks) -> Breaks:
    """Move each break to the nearest boundary between distinct values.

    Prefers the smaller movement, then the lower index on ties.  Opt-in
    post-pass: the raw algorithms may split runs of equal values.
    """
    n = series.n
    values = series.values
    boundaries = [0] + [p for p in range(1, n) if values[p - 1] != values[p]] + [n]
    snapped = []
    for b in breaks.indices:
        best = min(boundaries, key=lambda p: (abs(p - b), p))
        snapped.append(best)
    return Breaks(tuple(sorted(snapped)), breaks.k)


_METHODS = {
    "equal-interval": lambda s, spec: equal_interval_breaks(s, spec.k),
    "quantile": lambda s, spec: quantile_breaks(s, spec.k),
    "jenks": lambda s, spec: jenks_breaks(s, spec.k),
    "greedy1": lambda s, spec: greedy_equal_area(s, spec.k),
    "greedy2": lambda s, spec: greedy_equal_area_2(s, spec.k),
    "dp": lambda s, spec: dp_equal_area(s, spec.k),
    "balanced-greedy": lambda s, spec: balanced_greedy(
        s, spec.k, spec.u_bound, spec.l_bound),
    "dp-weighted": lambda s, spec: dp_weighted(
        s, spec.k, 0.5 if spec.w is None else spec.w),
}


def compute_breaks(series: SortedSeries, spec: MethodSpec) -> Breaks:
    """Dispatch a MethodSpec to its algorithm."""
    return _METHODS[spec.kind](series, spec)
