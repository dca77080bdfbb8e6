"""Print the sequential PageRank trace on the four-page example next to the published rows."""

import argparse

from linkrank import SolverConfig, build_graph, pagerank

EDGES = [("A", "B"), ("A", "C"), ("B", "A"), ("B", "C"), ("B", "D"),
         ("C", "A"), ("C", "B"), ("C", "D"), ("D", "A")]

# published rows keyed by snapshot index (row label minus one)
PUBLISHED = {
    0: (1, 1, 1, 1),
    1: (1.5666667, 1.0991667, 1.127264, 0.7808221),
    2: (1.4445208, 1.0833128, 1.07086, 0.760349),
    16: (1.3141432, 0.9886763, 0.9886358, 0.7102384),
    17: (1.313941, 0.9885384, 0.98851085, 0.71016395),
    18: (1.3138034, 0.98844457, 0.98842573, 0.7101132),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sweeps", type=int, default=34)
    args = ap.parse_args()

    _, trace = pagerank(build_graph(EDGES), SolverConfig(max_iterations=args.sweeps))
    print(f"{'k':>3} {'A':>11} {'B':>11} {'C':>11} {'D':>11} {'mean':>9}  max|diff|")
    for k, snap in enumerate(trace.snapshots):
        ref = PUBLISHED.get(k)
        diff = f"{max(abs(a - b) for a, b in zip(snap, ref)):.1e}" if ref else ""
        print(f"{k:>3} " + " ".join(f"{v:11.8f}" for v in snap) + f" {snap.mean():9.6f}  {diff}")


if __name__ == "__main__":
    main()
