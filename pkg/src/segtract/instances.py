"""Seeded generators for random segmentation instances, interval families and graphs."""

from __future__ import annotations

import random
from collections.abc import Iterator, Mapping

import numpy as np

from .core import SegmentBounds, Sequence, TableScoring
from .graph import IntervalFamily, WeightedIntervalGraph


def random_sequence(n: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Sequence:
    return Sequence(rng.randint(lo, hi) for _ in range(n))


def random_table(n: int, rng: random.Random, lo: int = 1, hi: int = 100) -> TableScoring:
    entries = {(i, j): rng.randint(lo, hi) for i in range(1, n + 1) for j in range(i, n + 1)}
    return TableScoring(entries)


def random_feasible_bounds(n: int, rng: random.Random) -> SegmentBounds:
    """Bounds ``[a, b]`` with ``1 <= a <= b <= n`` admitting at least one segmentation."""
    while True:
        a = rng.randint(1, n)
        b = rng.randint(a, n)
        # some k parts fit iff k*a <= n <= k*b
        if any(k * a <= n <= k * b for k in range(1, n // a + 1)):
            return SegmentBounds(a, b)


def random_interval_family(k: int, rng: random.Random, span: int = 20, wlo: int = -100, whi: int = 100) -> IntervalFamily:
    intervals = []
    for _ in range(k):
        lo = rng.randint(0, span)
        intervals.append((lo, rng.randint(lo, min(span, lo + rng.randint(0, span // 2)))))
    return IntervalFamily(intervals, [rng.randint(wlo, whi) for _ in range(k)])


def random_graph(n: int, p: float, rng: random.Random, wlo: int = -100, whi: int = 100) -> WeightedIntervalGraph:
    """Erdos-Renyi graph with random integer weights and no interval model."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return WeightedIntervalGraph.from_edges([rng.randint(wlo, whi) for _ in range(n)], edges)


class DenseTable(Mapping):
    """Read-only ``(start, end) -> score`` view over an upper-triangular array.

    Holds scores for every segment of a length-``n`` sequence in ``n*n``
    small integers instead of a dict of tuples.
    """

    def __init__(self, scores: np.ndarray):
        self._scores = scores
        self._n = scores.shape[0]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not 1 <= i <= j <= self._n:
            raise KeyError(key)
        return int(self._scores[i - 1, j - 1])

    def get(self, key, default=None):
        i, j = key
        if 1 <= i <= j <= self._n:
            return int(self._scores[i - 1, j - 1])
        return default

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return ((i, j) for i in range(1, self._n + 1) for j in range(i, self._n + 1))

    def __len__(self) -> int:
        return self._n * (self._n + 1) // 2


def random_dense_table(n: int, seed: int, lo: int = 1, hi: int = 100) -> TableScoring:
    gen = np.random.default_rng(seed)
    return TableScoring(DenseTable(gen.integers(lo, hi + 1, size=(n, n), dtype=np.int16)))
