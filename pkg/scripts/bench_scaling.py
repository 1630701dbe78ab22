"""Scaling run for the DP solver and segment-graph construction.

Writes a CSV with wall time and scoring calls per size; the DP column should
track N^2/2 calls and the graph build the O(N^4) pair test.

    python scripts/bench_scaling.py --out scaling.csv
"""

import argparse
import csv
import sys
import time

from segtract import ConstantScoring, CountingScoring, Sequence, solve_dp
from segtract.graph import build_segment_graph


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dp-sizes", default="250,500,1000,2000")
    parser.add_argument("--graph-sizes", default="25,50,75,100")
    parser.add_argument("--out")
    args = parser.parse_args()

    rows = []
    for n in map(int, args.dp_sizes.split(",")):
        counter = CountingScoring(ConstantScoring())
        t0 = time.perf_counter()
        solve_dp(Sequence([0] * n), counter)
        rows.append(("dp", n, time.perf_counter() - t0, counter.calls, ""))
    for n in map(int, args.graph_sizes.split(",")):
        t0 = time.perf_counter()
        g = build_segment_graph(Sequence([0] * n), ConstantScoring())
        rows.append(("segment_graph", n, time.perf_counter() - t0, g.n, g.edge_count()))

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(out)
    writer.writerow(["task", "N", "seconds", "calls_or_vertices", "edges"])
    for task, n, secs, calls, edges in rows:
        writer.writerow([task, n, f"{secs:.4f}", calls, edges])
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
