"""Domain types for sequence segmentation and objective evaluation.

Positions are 1-based and segment ranges are inclusive throughout.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable


class SegmentationError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(SegmentationError, ValueError):
    """An operation was called with arguments violating its precondition."""


class SegmentRangeError(SegmentationError, IndexError):
    """A segment or vertex index falls outside its owning object."""


class InfeasibleError(SegmentationError):
    """No segmentation satisfies the requested segment-length bounds."""


class DomainError(SegmentationError, ValueError):
    """A numeric parameter lies outside the range an operation supports."""


class BracketingError(SegmentationError):
    """A root-finding bracket does not enclose a sign change."""


@dataclass(frozen=True)
class Sequence:
    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(int(v) for v in elements)
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def values(self, seg: Segment) -> tuple[int, ...]:
        """Element values covered by ``seg``."""
        check_segment(self, seg)
        return self.elements[seg.start - 1 : seg.end]


@dataclass(frozen=True, order=True)
class Segment:
    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start:
            raise SegmentRangeError(f"invalid segment ({self.start},{self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def overlaps(self, other: Segment) -> bool:
        return self.start <= other.end and other.start <= self.end

    def as_pair(self) -> tuple[int, int]:
        return (self.start, self.end)


def check_segment(s: Sequence, seg: Segment) -> None:
    if seg.end > s.n:
        raise SegmentRangeError(f"segment ({seg.start},{seg.end}) outside sequence of length {s.n}")


@dataclass(frozen=True)
class SegmentBounds:
    """Allowed segment lengths ``[min_len, max_len]``; ``max_len=None`` means no cap."""

    min_len: int = 1
    max_len: int | None = None

    def __post_init__(self):
        if self.min_len < 1:
            raise ContractError(f"min_len must be >= 1, got {self.min_len}")
        if self.max_len is not None and self.max_len < self.min_len:
            raise ContractError(f"max_len {self.max_len} < min_len {self.min_len}")

    def upper(self, n: int) -> int:
        """Effective maximum length on a sequence of length ``n``."""
        return n if self.max_len is None else min(self.max_len, n)

    def admits(self, length: int) -> bool:
        return length >= self.min_len and (self.max_len is None or length <= self.max_len)

    def is_unconstrained(self, n: int) -> bool:
        return self.min_len == 1 and self.upper(n) == n


UNCONSTRAINED = SegmentBounds()


@runtime_checkable
class ScoringFunction(Protocol):
    """Total map from segments of a sequence to positive integers."""

    def __call__(self, s: Sequence, seg: Segment) -> int: ...


def _check_score(value: int, what: str) -> int:
    if not isinstance(value, int) or value < 1:
        raise ContractError(f"{what} must be an integer >= 1, got {value!r}")
    return value


@dataclass(frozen=True)
class TableScoring:
    """Explicit per-range scores, with ``default`` for ranges not listed.

    ``entries`` maps ``(start, end)`` pairs to scores.  Any read-only mapping
    works, which lets benchmarks back the table with a dense array.
    """

    entries: Mapping[tuple[int, int], int]
    default: int | None = None

    def __post_init__(self):
        if self.default is not None:
            _check_score(self.default, "table default")
        if isinstance(self.entries, dict):
            for key, value in self.entries.items():
                Segment(*key)
                _check_score(value, f"table entry {key}")

    def check_total(self, n: int) -> None:
        """Raise unless every segment of a length-``n`` sequence has a score."""
        for start, end in self.entries:
            if end > n:
                raise SegmentRangeError(f"table entry ({start},{end}) outside sequence of length {n}")
        if self.default is None:
            missing = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if (i, j) not in self.entries]
            if missing:
                raise ContractError(f"table has no default and no entry for segment {missing[0]}")

    def __call__(self, s: Sequence, seg: Segment) -> int:
        check_segment(s, seg)
        value = self.entries.get((seg.start, seg.end), self.default)
        if value is None:
            raise ContractError(f"no table entry for segment ({seg.start},{seg.end}) and no default")
        return value


@dataclass(frozen=True)
class PreferredLengthScoring:
    """``max(1, base - penalty * |length - target|)``; ignores contents."""

    base: int
    penalty: int
    target: int

    def __call__(self, s: Sequence, seg: Segment) -> int:
        check_segment(s, seg)
        return max(1, self.base - self.penalty * abs(seg.length - self.target))


@dataclass(frozen=True)
class ContentDictionaryScoring:
    """Scores segments whose contents equal a known pattern; others get ``default``."""

    entries: Mapping[tuple[int, ...], int]
    default: int = 1

    def __post_init__(self):
        _check_score(self.default, "dictionary default")
        for pattern, value in self.entries.items():
            if not pattern:
                raise ContractError("dictionary patterns must be nonempty")
            _check_score(value, f"dictionary entry {pattern}")

    def __call__(self, s: Sequence, seg: Segment) -> int:
        return self.entries.get(s.values(seg), self.default)


@dataclass(frozen=True)
class ContentSumClampedScoring:
    """``max(1, sum of the segment's elements)``."""

    def __call__(self, s: Sequence, seg: Segment) -> int:
        return max(1, sum(s.values(seg)))


@dataclass(frozen=True)
class ConstantScoring:
    value: int = 1

    def __post_init__(self):
        _check_score(self.value, "constant score")

    def __call__(self, s: Sequence, seg: Segment) -> int:
        check_segment(s, seg)
        return self.value


@dataclass
class CountingScoring:
    """Wraps a scoring function and counts how often it is evaluated."""

    inner: ScoringFunction
    calls: int = field(default=0)

    def __call__(self, s: Sequence, seg: Segment) -> int:
        self.calls += 1
        return self.inner(s, seg)


def score(f: ScoringFunction, s: Sequence, seg: Segment) -> int:
    check_segment(s, seg)
    return _check_score(f(s, seg), f"score of ({seg.start},{seg.end})")


@dataclass(frozen=True)
class Segmentation:
    segments: tuple[Segment, ...]

    def __init__(self, segments: Iterable[Segment | tuple[int, int]]):
        segs = tuple(seg if isinstance(seg, Segment) else Segment(*seg) for seg in segments)
        object.__setattr__(self, "segments", segs)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def lengths(self) -> tuple[int, ...]:
        return tuple(seg.length for seg in self.segments)

    def as_pairs(self) -> list[list[int]]:
        return [[seg.start, seg.end] for seg in self.segments]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> Segmentation:
        segs = []
        start = 1
        for length in lengths:
            segs.append(Segment(start, start + length - 1))
            start += length
        return cls(segs)


@dataclass(frozen=True)
class OptimalResult:
    segmentation: Segmentation
    value: int


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    reason: str = ""
    position: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_segmentation(s: Sequence, p: Segmentation) -> ValidationReport:
    """Check that ``p`` covers positions ``1..N`` of ``s`` with disjoint segments.

    Segments are examined in start order; the report names the first position
    that is covered twice, left uncovered, or lies past the end of ``s``.
    """
    n = s.n
    nxt = 1
    for seg in sorted(p.segments):
        if seg.start < nxt:
            return ValidationReport(False, f"overlap at index {seg.start}", seg.start)
        if seg.start > nxt:
            return ValidationReport(False, f"positions {nxt}..{seg.start - 1} uncovered", nxt)
        if seg.end > n:
            return ValidationReport(False, f"segment ({seg.start},{seg.end}) exceeds length {n}", n + 1)
        nxt = seg.end + 1
    if nxt <= n:
        return ValidationReport(False, f"positions {nxt}..{n} uncovered", nxt)
    return ValidationReport(True)


def segmentation_value(s: Sequence, p: Segmentation, f: ScoringFunction) -> int:
    report = validate_segmentation(s, p)
    if not report:
        raise ContractError(f"invalid segmentation: {report.reason}")
    return sum(score(f, s, seg) for seg in p.segments)
