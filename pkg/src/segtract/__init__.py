"""Optimal sequence segmentation: brute force, dynamic programming and the segment-graph reduction."""

from .core import (
    UNCONSTRAINED,
    BracketingError,
    ConstantScoring,
    ContentDictionaryScoring,
    ContentSumClampedScoring,
    ContractError,
    CountingScoring,
    DomainError,
    InfeasibleError,
    OptimalResult,
    PreferredLengthScoring,
    Segment,
    SegmentBounds,
    Segmentation,
    SegmentationError,
    SegmentRangeError,
    Sequence,
    TableScoring,
    ValidationReport,
    score,
    segmentation_value,
    validate_segmentation,
)
from .dp import solve_dp
from .enumeration import count_segmentations_bruteforce, enumerate_segmentations, solve_bruteforce

__all__ = [
    "UNCONSTRAINED",
    "BracketingError",
    "ConstantScoring",
    "ContentDictionaryScoring",
    "ContentSumClampedScoring",
    "ContractError",
    "CountingScoring",
    "DomainError",
    "InfeasibleError",
    "OptimalResult",
    "PreferredLengthScoring",
    "Segment",
    "SegmentBounds",
    "Segmentation",
    "SegmentationError",
    "SegmentRangeError",
    "Sequence",
    "TableScoring",
    "ValidationReport",
    "count_segmentations_bruteforce",
    "enumerate_segmentations",
    "score",
    "segmentation_value",
    "solve_bruteforce",
    "solve_dp",
    "validate_segmentation",
]
