"""Sorted weight sequences, prefix sums and break bookkeeping.

Every break-finding algorithm operates on a :class:`SortedSeries`: data
values sorted ascending with a non-negative weight per item and a prefix-sum
array over the weights for O(1) range sums.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field


def prefix_sums(weights) -> list[float]:
    """One-pass cumulative sums: [a, b, c] -> [0, a, a+b, a+b+c]."""
    prefix = [0.0]
    s = 0.0
    for w in weights:
        if not math.isfinite(w):
            raise ValueError(f"non-finite weight: {w!r}")
        s += w
        prefix.append(s)
    return prefix


def psum(prefix, i: int, j: int) -> float:
    """Sum of the underlying weights over [i, j) in O(1)."""
    if not (0 <= i <= j <= len(prefix) - 1):
        raise IndexError(f"bad range [{i}, {j}) for n={len(prefix) - 1}")
    return prefix[j] - prefix[i]


@dataclass(frozen=True)
class SortedSeries:
    """Items sorted ascending by value, with weight prefix sums."""

    values: tuple
    weights: tuple
    prefix: tuple

    def __post_init__(self):
        n = len(self.values)
        if len(self.weights) != n:
            raise ValueError("values and weights must have equal length")
        if len(self.prefix) != n + 1 or self.prefix[0] != 0:
            raise ValueError("prefix must have n+1 entries starting at 0")
        if any(self.values[i] > self.values[i + 1] for i in range(n - 1)):
            raise ValueError("values must be non-decreasing")
        for w in self.weights:
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"weights must be finite and >= 0, got {w!r}")

    @classmethod
    def build(cls, values, weights) -> "SortedSeries":
        return cls(tuple(values), tuple(float(w) for w in weights),
                   tuple(prefix_sums(weights)))

    @classmethod
    def from_weights(cls, weights) -> "SortedSeries":
        """Series with placeholder ascending values, for weight-only tests."""
        return cls.build(range(len(weights)), weights)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> float:
        return self.prefix[-1]

    def psum(self, i: int, j: int) -> float:
        return psum(self.prefix, i, j)


@dataclass(frozen=True)
class Breaks:
    """Non-decreasing split indices defining k contiguous chunks.

    Chunk i is the half-open index range [b_i, b_{i+1}) with sentinels
    b_0 = 0 and b_k = n.  Fewer than k-1 indices means trailing chunks
    are empty.
    """

    indices: tuple
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.indices) > self.k - 1:
            raise ValueError("at most k-1 break indices allowed")
        if any(self.indices[i] > self.indices[i + 1]
               for i in range(len(self.indices) - 1)):
            raise ValueError("break indices must be non-decreasing")

    def edges(self, n: int) -> list[int]:
        """All k+1 chunk edges over a series of length n."""
        for b in self.indices:
            if not 0 <= b <= n:
                raise ValueError(f"break index {b} out of [0, {n}]")
        pad = self.k - 1 - len(self.indices)
        return [0, *self.indices, *([n] * pad), n]


@dataclass(frozen=True)
class PartitionStats:
    """Per-chunk sums/lengths and the objective values for one partition."""

    chunk_sums: tuple
    chunk_lens: tuple
    avg: float
    avg_len: float
    error_abs: float
    weighted_objective: float | None = None


_METHOD_KINDS = (
    "equal-interval",
    "quantile",
    "jenks",
    "greedy1",
    "greedy2",
    "dp",
    "balanced-greedy",
    "dp-weighted",
)


@dataclass(frozen=True)
class MethodSpec:
    """Which break algorithm to run and its parameters."""

    kind: str
    k: int = 5
    w: float | None = None
    u_bound: float = 2.0
    l_bound: float = 0.5

    def __post_init__(self):
        if self.kind not in _METHOD_KINDS:
            raise ValueError(
                f"unknown method {self.kind!r}; valid: {', '.join(_METHOD_KINDS)}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.w is not None and not 0.0 <= self.w <= 1.0:
            raise ValueError("w must be in [0, 1]")
        if not self.l_bound < self.u_bound:
            raise ValueError("l_bound must be < u_bound")


METHOD_NAMES = _METHOD_KINDS
