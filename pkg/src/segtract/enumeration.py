"""Exhaustive enumeration of segmentations through boundary masks.

A length-``N`` sequence has ``N - 1`` boundary slots, slot ``k`` sitting
between positions ``k`` and ``k + 1``.  Masks are visited as the integers
``m = 0, 1, ..., 2**(N-1) - 1``, where bit ``k - 1`` of ``m`` set means slot
``k`` has *no* boundary.  Integer order is therefore lexicographic over the
slots read from the last one backwards, with boundary-present sorting before
boundary-absent: ``m = 0`` is the all-singletons segmentation and the final
mask is the single whole-sequence segment.
"""

from __future__ import annotations

from collections.abc import Iterator

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


def mask_to_lengths(mask: int, n: int) -> list[int]:
    if n == 1:
        return [1]
    # Slot 1 first; each run of set bits joins consecutive positions.
    slots = format(mask, f"0{n - 1}b")[::-1]
    return [len(run) + 1 for run in slots.split("0")]


def mask_to_bits(mask: int, n: int) -> list[bool]:
    """Boundary-present flags for slots ``1..N-1``."""
    return [not (mask >> k & 1) for k in range(n - 1)]


def segmentation_to_mask(p: Segmentation) -> int:
    n = p.segments[-1].end
    mask = (1 << (n - 1)) - 1
    for seg in p.segments[:-1]:
        mask &= ~(1 << (seg.end - 1))
    return mask


def _admissible_masks(n: int, bounds: SegmentBounds) -> Iterator[tuple[int, list[int]]]:
    lo, hi = bounds.min_len, bounds.upper(n)
    if n < lo:
        return
    for mask in range(1 << (n - 1)):
        lengths = mask_to_lengths(mask, n)
        if min(lengths) >= lo and max(lengths) <= hi:
            yield mask, lengths


def enumerate_segmentations(n: int, bounds: SegmentBounds = UNCONSTRAINED) -> Iterator[Segmentation]:
    """Yield every segmentation of ``1..n`` whose lengths lie in ``bounds``, in mask order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for _, lengths in _admissible_masks(n, bounds):
        yield Segmentation.from_lengths(lengths)


def count_segmentations_bruteforce(n: int, bounds: SegmentBounds = UNCONSTRAINED) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(1 for _ in _admissible_masks(n, bounds))


def solve_bruteforce(s: Sequence, f: ScoringFunction, bounds: SegmentBounds = UNCONSTRAINED) -> OptimalResult:
    """Evaluate every admissible segmentation; ties go to the first in mask order."""
    n = s.n
    if n < 1:
        raise ValueError("cannot segment an empty sequence")
    cache: dict[tuple[int, int], int] = {}

    def seg_score(start: int, end: int) -> int:
        key = (start, end)
        if key not in cache:
            cache[key] = score(f, s, Segment(start, end))
        return cache[key]

    best_value = None
    best_lengths = None
    for _, lengths in _admissible_masks(n, bounds):
        value = 0
        start = 1
        for length in lengths:
            value += seg_score(start, start + length - 1)
            start += length
        if best_value is None or value > best_value:
            best_value, best_lengths = value, lengths
    if best_lengths is None:
        raise InfeasibleError(f"no segmentation of length {n} with segment lengths in [{bounds.min_len}, {bounds.max_len}]")
    return OptimalResult(Segmentation.from_lengths(best_lengths), best_value)
