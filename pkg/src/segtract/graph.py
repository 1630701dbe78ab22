"""Interval graphs, segment graphs and minimum-weight independent domination.

Adjacency is kept as one neighbour bitmask per vertex (bit ``u`` of
``neighbor_masks[v]`` is set iff ``{u, v}`` is an edge).  The edge set is
derived on demand.  Intervals are closed integer ranges ``[lo, hi]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import ContractError, ScoringFunction, Segment, Segmentation, SegmentRangeError, Sequence, score


@dataclass(frozen=True)
class IntervalFamily:
    intervals: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def __init__(self, intervals: Iterable[tuple[int, int]], weights: Iterable[int] | None = None):
        ivs = tuple((int(lo), int(hi)) for lo, hi in intervals)
        for lo, hi in ivs:
            if lo > hi:
                raise ContractError(f"empty interval [{lo},{hi}]")
        ws = tuple(int(w) for w in weights) if weights is not None else (0,) * len(ivs)
        if len(ws) != len(ivs):
            raise ContractError("one weight per interval required")
        object.__setattr__(self, "intervals", ivs)
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True, eq=False)
class WeightedIntervalGraph:
    """Vertex-weighted undirected graph, optionally carrying its interval model.

    ``intervals`` is the interval model (``None`` for graphs given by edges
    alone); ``provenance`` maps vertices back to sequence segments for graphs
    built from a sequence.
    """

    weights: tuple[int, ...]
    neighbor_masks: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...] | None = None
    provenance: tuple[Segment, ...] | None = None

    @classmethod
    def from_edges(cls, weights: Iterable[int], edges: Iterable[tuple[int, int]]) -> WeightedIntervalGraph:
        ws = tuple(int(w) for w in weights)
        masks = [0] * len(ws)
        for u, v in edges:
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            if not (0 <= u < len(ws) and 0 <= v < len(ws)):
                raise SegmentRangeError(f"edge ({u},{v}) references unknown vertex")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(ws, tuple(masks))

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in _bits(self.neighbor_masks[u] >> (u + 1), u + 1))

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.neighbor_masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_masks[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.neighbor_masks) // 2


def _bits(mask: int, offset: int = 0) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + offset
        mask ^= low


def _overlap_masks(intervals: list[tuple[int, int]]) -> tuple[int, ...]:
    if not intervals:
        return ()
    lo = np.array([iv[0] for iv in intervals], dtype=np.int64)
    hi = np.array([iv[1] for iv in intervals], dtype=np.int64)
    # All-pairs intersection test, one row per vertex.
    adj = (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
    np.fill_diagonal(adj, False)
    packed = np.packbits(adj, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def build_interval_graph(fam: IntervalFamily) -> WeightedIntervalGraph:
    """Intersection graph of ``fam``; vertex ``i`` is ``fam.intervals[i]``."""
    return WeightedIntervalGraph(fam.weights, _overlap_masks(list(fam.intervals)), fam.intervals)


def segment_order(n: int) -> list[Segment]:
    """All contiguous segments of ``1..n``, by start then length."""
    return [Segment(i, i + j) for i in range(1, n + 1) for j in range(n - i + 1)]


def build_segment_graph(s: Sequence, f: ScoringFunction) -> WeightedIntervalGraph:
    """One vertex per contiguous segment, weighted by its negated score; edges join overlapping segments."""
    segs = segment_order(s.n)
    weights = tuple(-score(f, s, seg) for seg in segs)
    intervals = tuple(seg.as_pair() for seg in segs)
    return WeightedIntervalGraph(weights, _overlap_masks(list(intervals)), intervals, tuple(segs))


@dataclass(frozen=True)
class VertexSet:
    members: tuple[int, ...]
    weight: int

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def vertex_set(g: WeightedIntervalGraph, members: Iterable[int]) -> VertexSet:
    ms = tuple(sorted(set(members)))
    _to_mask(g, ms)
    return VertexSet(ms, sum(g.weights[v] for v in ms))


def _to_mask(g: WeightedIntervalGraph, vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        if not 0 <= v < g.n:
            raise SegmentRangeError(f"vertex {v} not in graph with {g.n} vertices")
        mask |= 1 << v
    return mask


def _independent(g: WeightedIntervalGraph, mask: int) -> bool:
    nb = g.neighbor_masks
    return all(not nb[v] & mask for v in _bits(mask))


def _dominating(g: WeightedIntervalGraph, mask: int) -> bool:
    covered = mask
    nb = g.neighbor_masks
    for v in _bits(mask):
        covered |= nb[v]
    return covered == (1 << g.n) - 1


def is_independent(g: WeightedIntervalGraph, vs: Iterable[int]) -> bool:
    return _independent(g, _to_mask(g, vs))


def is_dominating(g: WeightedIntervalGraph, vs: Iterable[int]) -> bool:
    return _dominating(g, _to_mask(g, vs))


def is_maximal_independent(g: WeightedIntervalGraph, vs: Iterable[int]) -> bool:
    mask = _to_mask(g, vs)
    if not _independent(g, mask):
        return False
    return not any(_independent(g, mask | 1 << v) for v in range(g.n) if not mask >> v & 1)


def is_minimal_dominating(g: WeightedIntervalGraph, vs: Iterable[int]) -> bool:
    mask = _to_mask(g, vs)
    if not _dominating(g, mask):
        return False
    return not any(_dominating(g, mask & ~(1 << v)) for v in _bits(mask))


def independent_sets(g: WeightedIntervalGraph) -> Iterator[tuple[int, ...]]:
    """Every independent vertex set, as sorted tuples in lexicographic order.

    Only supersets of dependent sets are skipped, so this is an exhaustive
    subset search restricted to the candidates that can possibly qualify.
    """
    nb = g.neighbor_masks
    n = g.n

    def extend(members: list[int], blocked: int, start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(members)
        for v in range(start, n):
            if not blocked >> v & 1:
                members.append(v)
                yield from extend(members, blocked | nb[v], v + 1)
                members.pop()

    yield from extend([], 0, 0)


def maximal_independent_sets(g: WeightedIntervalGraph) -> Iterator[tuple[int, ...]]:
    for members in independent_sets(g):
        if is_maximal_independent(g, members):
            yield members


def mwids_bruteforce(g: WeightedIntervalGraph) -> VertexSet:
    """Minimum-weight independent dominating set by exhaustive search.

    Works on any graph.  Ties resolve to the lexicographically smallest sorted
    index tuple.
    """
    if g.n == 0:
        return VertexSet((), 0)
    best = None
    best_weight = 0
    for members in independent_sets(g):
        if not _dominating(g, _to_mask(g, members)):
            continue
        weight = sum(g.weights[v] for v in members)
        if best is None or weight < best_weight:
            best, best_weight = members, weight
    return VertexSet(best, best_weight)


def mwids_interval(g: WeightedIntervalGraph) -> VertexSet:
    """Minimum-weight independent dominating set of an interval graph in O(n^2).

    In an interval graph an independent dominating set is a chain of pairwise
    disjoint intervals ``I_1 < ... < I_k`` such that no interval fits entirely
    before ``I_1``, in a gap between consecutive ``I_t``, or after ``I_k``.
    Sweeping vertices by right endpoint, ``cost[v]`` is the cheapest such
    chain ending at ``v`` with every gap so far blocked.  A gap after ``u`` and
    before ``v`` is blocked iff the smallest right endpoint among intervals
    starting after ``u`` is at least ``lo(v)``.
    """
    if g.intervals is None:
        raise ContractError("mwids_interval needs a graph with an interval model")
    n = g.n
    if n == 0:
        return VertexSet((), 0)
    lo = np.array([iv[0] for iv in g.intervals], dtype=np.int64)
    hi = np.array([iv[1] for iv in g.intervals], dtype=np.int64)

    # gap_min[u]: smallest hi among intervals with lo > hi[u] (sentinel when none)
    by_lo = np.argsort(lo, kind="stable")
    sorted_lo = lo[by_lo]
    suffix_min_hi = np.minimum.accumulate(hi[by_lo][::-1])[::-1]
    big = int(hi.max()) + 1
    pos = np.searchsorted(sorted_lo, hi, side="right")
    gap_min = np.where(pos < n, suffix_min_hi[np.minimum(pos, n - 1)], big)
    first_ok = hi.min() >= lo
    last_ok = lo.max() <= hi

    total = sum(abs(w) for w in g.weights)
    dtype = np.int64 if total < 2**60 else object
    inf = total + 1
    weights = np.array(g.weights, dtype=dtype)
    cost = np.full(n, inf, dtype=dtype)
    pred = np.full(n, -1, dtype=np.int64)

    for v in sorted(range(n), key=lambda i: (hi[i], lo[i], i)):
        cands = np.flatnonzero((hi < lo[v]) & (gap_min >= lo[v]) & (cost < inf))
        best_prev = inf
        if cands.size:
            k = cands[np.argmin(cost[cands])]
            best_prev = cost[k]
        if first_ok[v] and (best_prev >= inf or best_prev > 0):
            cost[v] = weights[v]
        elif best_prev < inf:
            cost[v] = best_prev + weights[v]
            pred[v] = k

    ends = np.flatnonzero(last_ok & (cost < inf))
    v = int(ends[np.argmin(cost[ends])])
    members = []
    while v >= 0:
        members.append(v)
        v = int(pred[v])
    return vertex_set(g, members)


def solution_to_segmentation(g: WeightedIntervalGraph, vs: Iterable[int]) -> Segmentation:
    """Read a segmentation off an independent dominating set of a segment graph."""
    if g.provenance is None:
        raise ContractError("graph carries no segment provenance")
    mask = _to_mask(g, vs)
    if not _independent(g, mask):
        raise ContractError("vertex set is not independent")
    if not _dominating(g, mask):
        raise ContractError("vertex set is not dominating")
    return Segmentation(sorted(g.provenance[v] for v in _bits(mask)))
