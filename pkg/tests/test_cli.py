import csv
import io
import json

import pydot
import pytest

from segtract import SegmentBounds, Segmentation, Sequence, segmentation_value, validate_segmentation
from segtract import cli
from segtract.graph import build_segment_graph
from segtract.io import ParseError, graph_from_json, graph_to_json, load_instance, parse_instance


def write(tmp_path, data, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


TWO_UNIT = {
    "sequence": [0, 0],
    "scoring": {"kind": "table", "entries": [{"start": 1, "end": 1, "score": 5}, {"start": 2, "end": 2, "score": 5}, {"start": 1, "end": 2, "score": 1}]},
}


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_segment_dp(tmp_path, capsys):
    code, out, _ = run(capsys, "segment", write(tmp_path, TWO_UNIT), "--solver", "dp")
    assert code == 0
    assert "value: 10" in out and "[1,1] [2,2]" in out


def test_segment_constant_brute(tmp_path, capsys):
    inst = {"sequence": [1, 2, 3, 4], "scoring": {"kind": "table", "default": 1}}
    code, out, _ = run(capsys, "segment", write(tmp_path, inst), "--solver", "brute", "--json")
    assert code == 0 and json.loads(out)["value"] == 4


SCORINGS = [
    {"kind": "table", "entries": [{"start": 2, "end": 4, "score": 30}, {"start": 1, "end": 1, "score": 4}], "default": 2},
    {"kind": "preferred_length", "base": 10, "penalty": 3, "target": 2},
    {"kind": "content_dictionary", "entries": [{"pattern": [1, 2], "score": 9}, {"pattern": [3], "score": 4}], "default": 1},
    {"kind": "content_sum_clamped"},
]


@pytest.mark.parametrize("scoring", SCORINGS, ids=lambda s: s["kind"])
def test_solvers_agree_and_roundtrip(tmp_path, capsys, scoring):
    data = {"sequence": [1, 2, 3, 1, 2, -4, 7], "scoring": scoring}
    path = write(tmp_path, data)
    values = set()
    inst = load_instance(path)
    for solver in ("brute", "dp", "graph"):
        code, out, _ = run(capsys, "segment", path, "--solver", solver, "--json")
        assert code == 0
        result = json.loads(out)
        values.add(result["value"])
        p = Segmentation([tuple(pair) for pair in result["segments"]])
        assert validate_segmentation(inst.sequence, p)
        assert segmentation_value(inst.sequence, p, inst.scoring) == result["value"]
    assert len(values) == 1


def test_segment_with_bounds(tmp_path, capsys):
    data = {"sequence": [0] * 4, "scoring": {"kind": "table", "entries": [{"start": 1, "end": 4, "score": 3}], "default": 1}, "bounds": {"min": 2, "max": 4}}
    code, out, _ = run(capsys, "segment", write(tmp_path, data), "--json")
    assert json.loads(out) == {"segments": [[1, 4]], "value": 3}


def test_segment_out_file(tmp_path, capsys):
    target = tmp_path / "res.json"
    code, out, _ = run(capsys, "segment", write(tmp_path, TWO_UNIT), "--json", "--out", target)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["value"] == 10


@pytest.mark.parametrize(
    "data",
    [
        {"sequence": [], "scoring": {"kind": "content_sum_clamped"}},
        {"sequence": [1, 2], "scoring": {"kind": "table", "entries": [{"start": 1, "end": 1, "score": 3}]}},
        {"sequence": [1, 2], "scoring": {"kind": "table", "entries": [{"start": 1, "end": 3, "score": 3}], "default": 1}},
        {"sequence": [1, 2], "scoring": {"kind": "table", "entries": [{"start": 1, "end": 1, "score": 0}], "default": 1}},
        {"sequence": [1, 2], "scoring": {"kind": "mystery"}},
        {"sequence": [1, 2], "scoring": {"kind": "preferred_length", "base": 3}},
        {"sequence": [1, "a"], "scoring": {"kind": "content_sum_clamped"}},
        {"sequence": [1, 2], "scoring": {"kind": "content_sum_clamped"}, "bounds": {"min": 3, "max": 2}},
    ],
)
def test_parse_failures_exit_2(tmp_path, capsys, data):
    code, out, err = run(capsys, "segment", write(tmp_path, data))
    assert code == 2 and out == "" and err.startswith("error:")


def test_unreadable_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "segment", bad)[0] == 2
    assert run(capsys, "graph", tmp_path / "missing.json")[0] == 2


def test_infeasible_exit_3(tmp_path, capsys):
    data = {"sequence": [0] * 5, "scoring": {"kind": "content_sum_clamped"}, "bounds": {"min": 2, "max": 2}}
    code, out, _ = run(capsys, "segment", write(tmp_path, data))
    assert code == 3 and out == ""


def test_graph_solver_rejects_bounds(tmp_path, capsys):
    data = {"sequence": [0] * 4, "scoring": {"kind": "content_sum_clamped"}, "bounds": {"min": 2}}
    code, out, _ = run(capsys, "segment", write(tmp_path, data), "--solver", "graph")
    assert code == 6 and out == ""


def test_brute_segment_guard(tmp_path, capsys):
    data = {"sequence": [0] * 21, "scoring": {"kind": "content_sum_clamped"}}
    assert run(capsys, "segment", write(tmp_path, data), "--solver", "brute")[0] == 4


@pytest.mark.parametrize("argv, expected", [(["4"], 8), (["4", "--max", "2"], 5), (["4", "--method", "brute"], 8), (["4", "--max", "2", "--method", "brute"], 5)])
def test_count_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and int(out) == expected


def test_count_large_exact(capsys):
    code, out, _ = run(capsys, "count", 200, "--max", 2)
    fib = [0, 1]
    while len(fib) < 202:
        fib.append(fib[-1] + fib[-2])
    # compositions of N into 1s and 2s number Fib(N+1)
    assert int(out) == fib[201]
    assert len(out.strip()) == 42


def test_count_guard(capsys):
    code, out, _ = run(capsys, "count", 26, "--method", "brute")
    assert code == 4 and out == ""
    code, out, _ = run(capsys, "count", 3, "--method", "brute", "--force")
    assert code == 0


BOUNDS_ARGS = [[], ["--min", 2], ["--min", 3], ["--min", 4], ["--max", 2], ["--max", 3], ["--max", 5], ["--min", 2, "--max", 3], ["--min", 2, "--max", 5], ["--min", 3, "--max", 7]]


@pytest.mark.parametrize("bounds", BOUNDS_ARGS, ids=lambda b: " ".join(map(str, b)) or "unbounded")
def test_count_methods_agree(capsys, bounds):
    for n in range(1, 19):
        _, brute, _ = run(capsys, "count", n, *bounds, "--method", "brute")
        _, gf, _ = run(capsys, "count", n, *bounds, "--method", "gf")
        assert brute == gf


def test_count_gf_domain_error(capsys):
    code, out, _ = run(capsys, "count", 6, "--min", 2, "--max", 2)
    assert code == 2 and out == ""


def parse_growth(out):
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


@pytest.mark.parametrize("argv, A", [([], 2.0), (["--max", 2], 1.618034), (["--min", 2, "--max", 3], 1.324718)])
def test_growth_examples(capsys, argv, A):
    code, out, err = run(capsys, "growth", *argv)
    fields = parse_growth(out)
    assert code == 0 and err == ""
    assert float(fields["A"].split()[0]) == pytest.approx(A, abs=1e-6)
    assert float(fields["empirical_ratio_N200"]) == pytest.approx(A, abs=1e-6)


def test_growth_bracketing_failure(capsys, monkeypatch):
    monkeypatch.setitem(cli.comb.BRACKETS, "lower", (0.9, 1.0))
    code, out, _ = run(capsys, "growth", "--min", 2)
    assert code == 5 and out == ""


def test_growth_domain_error(capsys):
    assert run(capsys, "growth", "--min", 3, "--max", 3)[0] == 2


def dot_graph(text):
    (graph,) = pydot.graph_from_dot_data(text)
    return graph


@pytest.mark.parametrize("n, nodes, edges", [(1, 1, 0), (2, 3, 2), (4, 10, 30)])
def test_graph_dot(tmp_path, capsys, n, nodes, edges):
    data = {"sequence": list(range(n)), "scoring": {"kind": "content_sum_clamped"}}
    code, out, _ = run(capsys, "graph", write(tmp_path, data))
    graph = dot_graph(out)
    assert code == 0
    assert len(graph.get_nodes()) == nodes
    # overlapping pairs = C(T, 2) minus disjoint pairs i<=j<k<=l, i.e. C(n+2, 4)
    assert len(graph.get_edges()) == edges


def test_graph_dot_labels(tmp_path, capsys):
    code, out, _ = run(capsys, "graph", write(tmp_path, TWO_UNIT))
    labels = sorted(node.get("label").strip('"') for node in dot_graph(out).get_nodes())
    assert labels == ["[1,1] w=-5", "[1,2] w=-1", "[2,2] w=-5"]


def test_graph_json_roundtrip(tmp_path, capsys):
    data = {"sequence": [3, 1, 4, 1, 5], "scoring": {"kind": "content_sum_clamped"}}
    code, out, _ = run(capsys, "graph", write(tmp_path, data), "--format", "json")
    payload = json.loads(out)
    assert len(payload["vertices"]) == 15
    g = graph_from_json(payload)
    original = build_segment_graph(Sequence(data["sequence"]), load_instance(write(tmp_path, data)).scoring)
    assert g.weights == original.weights and g.edges == original.edges and g.intervals == original.intervals
    assert graph_to_json(g) == payload


def test_graph_json_rejects_inconsistent_edges():
    payload = {"vertices": [{"id": 0, "weight": 1, "start": 1, "end": 1}, {"id": 1, "weight": 1, "start": 2, "end": 2}], "edges": [[0, 1]]}
    with pytest.raises(ParseError):
        graph_from_json(payload)


def test_graph_guard(tmp_path, capsys):
    data = {"sequence": [0] * 61, "scoring": {"kind": "content_sum_clamped"}}
    assert run(capsys, "graph", write(tmp_path, data))[0] == 4


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_bench_cross_check(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "4", "--solvers", "brute,dp,graph", "--seed", 3)
    rows = read_csv(out)
    assert code == 0 and [r["solver"] for r in rows] == ["brute", "dp", "graph"]
    assert len({r["value"] for r in rows}) == 1


def test_bench_skips_large_brute(capsys):
    code, out, err = run(capsys, "bench", "--sizes", "25", "--solvers", "brute")
    assert code == 0 and read_csv(out) == [] and "skipping brute at N=25" in err


def test_bench_dp_2000(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "2000", "--solvers", "dp")
    (row,) = read_csv(out)
    assert int(row["scoring_calls"]) <= 4 * 10**6


def test_bench_is_seeded(capsys):
    first = read_csv(run(capsys, "bench", "--sizes", "6,9", "--solvers", "dp", "--seed", 5)[1])
    second = read_csv(run(capsys, "bench", "--sizes", "9,6", "--solvers", "dp", "--seed", 5)[1])
    assert [r["value"] for r in first] == [r["value"] for r in second]
    assert [int(r["N"]) for r in first] == [6, 9]


def test_bench_unknown_solver(capsys):
    assert run(capsys, "bench", "--solvers", "magic")[0] == 2


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--trials", 50)
    assert code == 0 and out.count("[PASS]") == 5


def test_parse_instance_kinds():
    for scoring in SCORINGS:
        inst = parse_instance({"sequence": [1, 2, 3, 4], "scoring": scoring, "bounds": {"min": 1}})
        assert inst.bounds == SegmentBounds(1, None)
