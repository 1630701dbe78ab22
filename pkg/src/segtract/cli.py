"""Command-line interface.

Exit codes: 0 success, 1 selfcheck failure, 2 parse or argument error,
3 infeasible bounds, 4 size guard tripped (override with ``--force``),
5 root bracketing failure, 6 solver does not support the instance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from pathlib import Path

from . import combinatorics as comb
from .core import (
    UNCONSTRAINED,
    BracketingError,
    CountingScoring,
    DomainError,
    InfeasibleError,
    OptimalResult,
    SegmentBounds,
    Sequence,
    segmentation_value,
    validate_segmentation,
)
from .dp import solve_dp
from .enumeration import count_segmentations_bruteforce, solve_bruteforce
from .graph import build_interval_graph, build_segment_graph, mwids_bruteforce, mwids_interval, solution_to_segmentation
from .instances import random_dense_table, random_feasible_bounds, random_interval_family, random_table
from .io import ParseError, graph_to_dot, graph_to_json, load_instance

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_GUARD, EXIT_BRACKET, EXIT_UNSUPPORTED = range(7)

BRUTE_SEGMENT_MAX = 20
BRUTE_COUNT_MAX = 25
GRAPH_EXPORT_MAX = 60
BENCH_BRUTE_MAX = 20
BENCH_GRAPH_MAX = 40
DEFAULT_SEED = 20240101

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def solve_graph(s: Sequence, f, bounds: SegmentBounds = UNCONSTRAINED) -> OptimalResult:
    """Solve through the segment graph and its minimum-weight independent dominating set."""
    if not bounds.is_unconstrained(s.n):
        raise CLIError("the graph solver handles unconstrained instances only", EXIT_UNSUPPORTED)
    g = build_segment_graph(s, f)
    vs = mwids_interval(g)
    return OptimalResult(solution_to_segmentation(g, vs), -vs.weight)


SOLVERS = {"brute": solve_bruteforce, "dp": solve_dp, "graph": solve_graph}


def _bounds(args) -> SegmentBounds:
    try:
        return SegmentBounds(args.min, args.max)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_PARSE) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_segment(args) -> int:
    inst = load_instance(args.instance)
    if args.solver == "brute" and inst.sequence.n > BRUTE_SEGMENT_MAX and not args.force:
        raise CLIError(f"brute solver limited to N <= {BRUTE_SEGMENT_MAX} (use --force)", EXIT_GUARD)
    result = SOLVERS[args.solver](inst.sequence, inst.scoring, inst.bounds)
    if args.json:
        text = json.dumps({"segments": result.segmentation.as_pairs(), "value": result.value}) + "\n"
    else:
        rows = [f"[{seg.start},{seg.end}]" for seg in result.segmentation]
        text = f"segments: {' '.join(rows)}\nvalue: {result.value}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    bounds = _bounds(args)
    n = args.n
    if n < 1:
        raise CLIError("N must be >= 1", EXIT_PARSE)
    if args.method == "brute":
        if n > BRUTE_COUNT_MAX and not args.force:
            raise CLIError(f"brute counting limited to N <= {BRUTE_COUNT_MAX} (use --force)", EXIT_GUARD)
        count = count_segmentations_bruteforce(n, bounds)
    else:
        count = comb.count_compositions(n, bounds)
    _emit(f"{count}\n", args.out)
    return EXIT_OK


def cmd_growth(args) -> int:
    bounds = _bounds(args)
    kind = comb.classify_bounds(bounds)
    gf = comb.gf_for_bounds(bounds, kind)
    est = comb.growth_factor(gf, comb.BRACKETS[kind])
    ratio = comb.empirical_growth(comb.coefficients(gf, 200))
    text = (
        f"kind: {kind}\n"
        f"gf: {gf}\n"
        f"reduced: {comb.reduce_common_factors(gf)}\n"
        f"alpha: {est.alpha:.12f} +/- {est.alpha_err:.1e}\n"
        f"A: {est.A:.12f} +/- {est.A_err:.1e}\n"
        f"residual: {est.residual:.3e}\n"
        f"empirical_ratio_N200: {ratio:.12f}\n"
    )
    _emit(text, args.out)
    if abs(ratio - est.A) > 1e-6:
        print(f"warning: analytic A and empirical ratio differ by {abs(ratio - est.A):.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args) -> int:
    inst = load_instance(args.instance)
    if inst.sequence.n > GRAPH_EXPORT_MAX and not args.force:
        raise CLIError(f"graph export limited to N <= {GRAPH_EXPORT_MAX} (use --force)", EXIT_GUARD)
    g = build_segment_graph(inst.sequence, inst.scoring)
    if args.format == "dot":
        text = graph_to_dot(g)
    else:
        text = json.dumps(graph_to_json(g)) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def bench_rows(sizes: list[int], solvers: list[str], seed: int, notices: list[str] | None = None) -> list[dict]:
    rows = []
    for n in sorted(sizes):
        s = Sequence([0] * n)
        table = random_dense_table(n, seed + n)
        for name in sorted(solvers):
            if name == "brute" and n > BENCH_BRUTE_MAX:
                if notices is not None:
                    notices.append(f"skipping brute at N={n} (limit {BENCH_BRUTE_MAX})")
                continue
            if name == "graph" and n > BENCH_GRAPH_MAX:
                if notices is not None:
                    notices.append(f"skipping graph at N={n} (limit {BENCH_GRAPH_MAX})")
                continue
            counter = CountingScoring(table)
            t0 = time.perf_counter()
            result = SOLVERS[name](s, counter, UNCONSTRAINED)
            millis = (time.perf_counter() - t0) * 1000
            rows.append({"N": n, "solver": name, "millis": round(millis, 3), "scoring_calls": counter.calls, "value": result.value})
    return rows


def cmd_bench(args) -> int:
    sizes = [int(v) for v in args.sizes.split(",") if v]
    solvers = [v for v in args.solvers.split(",") if v]
    unknown = set(solvers) - set(SOLVERS)
    if unknown:
        raise CLIError(f"unknown solvers: {', '.join(sorted(unknown))}", EXIT_PARSE)
    notices: list[str] = []
    rows = bench_rows(sizes, solvers, args.seed, notices)
    for line in notices:
        print(line, file=sys.stderr)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["N", "solver", "millis", "scoring_calls", "value"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def selfcheck(seed: int = DEFAULT_SEED, trials: int = 200) -> list[tuple[str, bool]]:
    """Quick oracle-equivalence checks; returns ``(name, passed)`` pairs."""
    rng = random.Random(seed)
    results = []

    ok = all(count_segmentations_bruteforce(n) == 2 ** (n - 1) for n in range(1, 13))
    results.append(("unbounded count = 2^(N-1) for N <= 12", ok))

    matrix = [SegmentBounds(a) for a in (2, 3, 4)] + [SegmentBounds(1, b) for b in (2, 3, 5)]
    matrix += [SegmentBounds(2, 3), SegmentBounds(2, 5), SegmentBounds(3, 7)]
    ok = all(
        comb.coefficients(comb.gf_for_bounds(b), 14)[n] == count_segmentations_bruteforce(n, b)
        for b in matrix
        for n in range(1, 15)
    )
    results.append(("generating-function counts = brute force for N <= 14", ok))

    ok = True
    for b in matrix:
        est = comb.growth_for_bounds(b)
        ratio = comb.empirical_growth(comb.coefficients(comb.gf_for_bounds(b), 200))
        ok &= abs(est.A - ratio) <= 1e-6 and 1 < est.A < 2
    results.append(("growth factor matches coefficient ratio at N=200", ok))

    ok = True
    for _ in range(trials):
        n = rng.randint(1, 7)
        s = Sequence([0] * n)
        f = random_table(n, rng)
        brute = solve_bruteforce(s, f)
        g = build_segment_graph(s, f)
        vs = mwids_interval(g)
        seg = solution_to_segmentation(g, vs)
        ok &= brute.value == solve_dp(s, f).value == -vs.weight == segmentation_value(s, seg, f)
        bounds = random_feasible_bounds(n, rng)
        dp = solve_dp(s, f, bounds)
        ok &= dp.value == solve_bruteforce(s, f, bounds).value and bool(validate_segmentation(s, dp.segmentation))
    results.append(("brute = dp = graph reduction on random instances", ok))

    ok = True
    for _ in range(trials):
        g = build_interval_graph(random_interval_family(rng.randint(1, 10), rng))
        ok &= mwids_interval(g).weight == mwids_bruteforce(g).weight
    results.append(("interval MWIDS = brute-force MWIDS", ok))
    return results


def cmd_selfcheck(args) -> int:
    results = selfcheck(args.seed, args.trials)
    for name, ok in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segtract", description="Optimal sequence segmentation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--solver", choices=sorted(SOLVERS), default="dp")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_segment)

    def add_bounds(p):
        p.add_argument("--min", type=int, default=1, help="minimum segment length")
        p.add_argument("--max", type=int, default=None, help="maximum segment length")

    p = sub.add_parser("count", help="count segmentations of length N")
    p.add_argument("n", type=int)
    add_bounds(p)
    p.add_argument("--method", choices=["brute", "gf"], default="gf")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("growth", help="exponential growth factor of the segmentation count")
    add_bounds(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("graph", help="export the segment graph of an instance")
    p.add_argument("instance")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("bench", help="time solvers on random table scorings (CSV)")
    p.add_argument("--sizes", default="4,8,16,32,64,128")
    p.add_argument("--solvers", default="brute,dp,graph")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selfcheck", help="run the oracle-equivalence checks")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BracketingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BRACKET
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
