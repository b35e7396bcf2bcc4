"""Exhaustive brute-force partition enumeration, the ground truth the
optimality tests check the dynamic programs against.

Deliberately slow and simple; guarded to small instances.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .partition import weighted_objective
from .series import Breaks, SortedSeries

MAX_N = 24
MAX_K = 6


def _guard(n: int, k: int):
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n > MAX_N or k > MAX_K:
        raise ValueError(f"enumeration guarded to n <= {MAX_N}, k <= {MAX_K}")


def enumerate_partitions(n: int, k: int) -> Iterator[Breaks]:
    """Every non-decreasing (k-1)-tuple over [0, n], lexicographic order.

    Emits C(n+k-1, k-1) tuples (stars and bars, repeats allowed).
    """
    _guard(n, k)
    for t in combinations_with_replacement(range(n + 1), k - 1):
        yield Breaks(t, k)


def _abs_unnormalized(series: SortedSeries, breaks: Breaks) -> float:
    avg = series.total / breaks.k
    edges = breaks.edges(series.n)
    return sum(abs(series.psum(edges[i], edges[i + 1]) - avg)
               for i in range(breaks.k))


def _squared_unnormalized(series: SortedSeries, breaks: Breaks) -> float:
    avg = series.total / breaks.k
    edges = breaks.edges(series.n)
    return sum((series.psum(edges[i], edges[i + 1]) - avg) ** 2
               for i in range(breaks.k))


def _sse(series: SortedSeries, breaks: Breaks) -> float:
    edges = breaks.edges(series.n)
    total = 0.0
    for i in range(breaks.k):
        members = series.values[edges[i]:edges[i + 1]]
        mean = sum(members) / len(members)
        total += sum((v - mean) ** 2 for v in members)
    return total


def brute_force_min(series: SortedSeries, k: int, objective: str = "abs",
                    w: float | None = None) -> tuple[Breaks, float]:
    """Global minimum of the chosen objective over all break placements.

    objective is one of "abs" (unnormalized sum |chunk sum - avg|),
    "squared" (unnormalized sum of squared deviations), "weighted"
    (the blended objective at the given w) or "sse" (within-class value
    variance; non-empty classes only).  Ties keep the lexicographically
    first break tuple.
    """
    n = series.n
    _guard(n, k)
    if objective == "abs":
        score = _abs_unnormalized
        candidates = enumerate_partitions(n, k)
    elif objective == "squared":
        score = _squared_unnormalized
        candidates = enumerate_partitions(n, k)
    elif objective == "weighted":
        if w is None:
            raise ValueError("weighted objective needs w")
        score = lambda s, b: weighted_objective(s, b, w)  # noqa: E731
        candidates = enumerate_partitions(n, k)
    elif objective == "sse":
        if k > n:
            raise ValueError("sse objective needs k <= n (non-empty classes)")
        score = _sse
        candidates = (Breaks(t, k) for t in combinations(range(1, n), k - 1))
    else:
        raise ValueError(f"unknown objective {objective!r}")

    best_breaks = None
    best = float("inf")
    for b in candidates:
        v = score(series, b)
        if v < best:
            best = v
            best_breaks = b
    assert best_breaks is not None
    return best_breaks, best
