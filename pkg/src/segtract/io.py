"""Instance files and graph export formats.

Instance files are JSON::

    {"sequence": [3, -1, 4],
     "scoring": {"kind": "table", "entries": [{"start": 1, "end": 2, "score": 7}], "default": 1},
     "bounds": {"min": 1, "max": 3}}

Scoring kinds are ``table``, ``preferred_length`` (``base``, ``penalty``,
``target``), ``content_dictionary`` (``entries`` of ``pattern``/``score``
plus ``default``) and ``content_sum_clamped``.  ``bounds`` and either of its
keys may be omitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .core import (
    UNCONSTRAINED,
    ContentDictionaryScoring,
    ContentSumClampedScoring,
    PreferredLengthScoring,
    ScoringFunction,
    Segment,
    SegmentationError,
    SegmentBounds,
    Sequence,
    TableScoring,
)
from .graph import WeightedIntervalGraph, build_interval_graph, IntervalFamily


class ParseError(SegmentationError, ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    sequence: Sequence
    scoring: ScoringFunction
    bounds: SegmentBounds = UNCONSTRAINED


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def parse_scoring(spec: Any, n: int) -> ScoringFunction:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("scoring must be an object with a 'kind'")
    kind = spec["kind"]
    try:
        if kind == "table":
            entries = {}
            for e in spec.get("entries", []):
                key = (_int(e["start"], "entry start"), _int(e["end"], "entry end"))
                Segment(*key)
                entries[key] = _int(e["score"], "entry score")
            default = spec.get("default")
            table = TableScoring(entries, None if default is None else _int(default, "default"))
            table.check_total(n)
            return table
        if kind == "preferred_length":
            return PreferredLengthScoring(
                _int(spec["base"], "base"), _int(spec["penalty"], "penalty"), _int(spec["target"], "target")
            )
        if kind == "content_dictionary":
            entries = {
                tuple(_int(v, "pattern element") for v in e["pattern"]): _int(e["score"], "entry score")
                for e in spec.get("entries", [])
            }
            return ContentDictionaryScoring(entries, _int(spec.get("default", 1), "default"))
        if kind == "content_sum_clamped":
            return ContentSumClampedScoring()
    except KeyError as exc:
        raise ParseError(f"scoring of kind {kind!r} is missing field {exc}") from None
    except (TypeError, SegmentationError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad {kind} scoring: {exc}") from None
    raise ParseError(f"unknown scoring kind {kind!r}")


def parse_instance(data: Any) -> Instance:
    if not isinstance(data, dict):
        raise ParseError("instance must be a JSON object")
    seq = data.get("sequence")
    if not isinstance(seq, list) or not seq:
        raise ParseError("sequence must be a nonempty list of integers")
    s = Sequence(_int(v, "sequence element") for v in seq)
    f = parse_scoring(data.get("scoring"), s.n)
    raw = data.get("bounds") or {}
    if not isinstance(raw, dict):
        raise ParseError("bounds must be an object")
    try:
        lo = _int(raw.get("min", 1), "bounds.min")
        hi = raw.get("max")
        bounds = SegmentBounds(lo, None if hi is None else _int(hi, "bounds.max"))
    except SegmentationError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    return Instance(s, f, bounds)


def load_instance(path: str | Path) -> Instance:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read instance {path}: {exc}") from None
    return parse_instance(data)


def graph_to_json(g: WeightedIntervalGraph) -> dict:
    vertices = []
    for v in range(g.n):
        item: dict[str, Any] = {"id": v, "weight": g.weights[v]}
        if g.intervals is not None:
            item["start"], item["end"] = g.intervals[v]
        vertices.append(item)
    return {"vertices": vertices, "edges": sorted([u, v] for u, v in g.edges)}


def graph_from_json(data: dict) -> WeightedIntervalGraph:
    """Rebuild a graph written by :func:`graph_to_json`.

    When every vertex carries an interval the graph is rebuilt from the
    interval model and checked against the stored edges.
    """
    try:
        vertices = sorted(data["vertices"], key=lambda item: item["id"])
        weights = [_int(item["weight"], "weight") for item in vertices]
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None
    if [item["id"] for item in vertices] != list(range(len(vertices))):
        raise ParseError("vertex ids must be 0..n-1")
    if vertices and all("start" in item and "end" in item for item in vertices):
        g = build_interval_graph(IntervalFamily([(item["start"], item["end"]) for item in vertices], weights))
        if g.edges != frozenset((min(u, v), max(u, v)) for u, v in edges):
            raise ParseError("stored edges disagree with the interval model")
        return g
    return WeightedIntervalGraph.from_edges(weights, edges)


def graph_to_dot(g: WeightedIntervalGraph, name: str = "segment_graph") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.intervals is not None:
            lo, hi = g.intervals[v]
            label = f"[{lo},{hi}] w={g.weights[v]}"
        else:
            label = f"{v} w={g.weights[v]}"
        lines.append(f'  v{v} [label="{label}", weight={g.weights[v]}];')
    for u, v in sorted(g.edges):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
