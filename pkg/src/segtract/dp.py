"""Optimal segmentation by interval dynamic programming."""

from __future__ import annotations

from .core import (
    UNCONSTRAINED,
    InfeasibleError,
    OptimalResult,
    ScoringFunction,
    Segment,
    SegmentBounds,
    Segmentation,
    Sequence,
    score,
)


def solve_dp(s: Sequence, f: ScoringFunction, bounds: SegmentBounds = UNCONSTRAINED) -> OptimalResult:
    """Maximize the summed segment score over segmentations respecting ``bounds``.

    ``best[j]`` is the optimal value of positions ``1..j``, built from the
    best prefix plus one trailing segment of length ``a..min(b, j)``.  On equal
    value the shorter trailing segment wins, which reproduces the witness that
    :func:`segtract.enumeration.solve_bruteforce` picks.  The scoring function
    is called at most ``N * (b - a + 1)`` times, and only for trailing
    segments whose prefix is itself feasible.
    """
    n = s.n
    if n < 1:
        raise ValueError("cannot segment an empty sequence")
    lo, hi = bounds.min_len, bounds.upper(n)
    best: list[int | None] = [None] * (n + 1)
    choice = [0] * (n + 1)
    best[0] = 0
    for j in range(lo, n + 1):
        top = None
        arg = 0
        for length in range(lo, min(hi, j) + 1):
            prev = best[j - length]
            if prev is None:
                continue
            value = prev + score(f, s, Segment(j - length + 1, j))
            if top is None or value > top:
                top, arg = value, length
        best[j] = top
        choice[j] = arg
    if best[n] is None:
        raise InfeasibleError(f"no segmentation of length {n} with segment lengths in [{bounds.min_len}, {bounds.max_len}]")

    lengths = []
    j = n
    while j > 0:
        lengths.append(choice[j])
        j -= choice[j]
    return OptimalResult(Segmentation.from_lengths(reversed(lengths)), best[n])
