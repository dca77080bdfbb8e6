"""Rank a graph with every unipartite algorithm and print rankings plus the Kendall-tau matrix."""

import argparse

from linkrank import (
    SolverConfig,
    distance_rank,
    hits,
    kendall_tau,
    normalized_pagerank,
    pagerank,
    to_ranking,
    weighted_pagerank,
)
from linkrank.compare import ranking_from_scores
from linkrank.graph import read_edge_list


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("graph", nargs="?", default="data/four_pages.tsv")
    ap.add_argument("--seed", default=None, help="distance seed label (default: first node)")
    args = ap.parse_args()

    g = read_edge_list(args.graph)
    cfg = SolverConfig(max_iterations=1000)
    h = hits(g, config=cfg)
    rankings = [
        to_ranking(pagerank(g, cfg)[0]),
        to_ranking(normalized_pagerank(g, cfg.replace(update_mode="synchronous"))[0]),
        to_ranking(weighted_pagerank(g, cfg)[0]),
        ranking_from_scores(h.authority, h.labels, "hits-authority"),
        to_ranking(distance_rank(g, [args.seed or g.labels[0]])[1]),
    ]
    for r in rankings:
        print(f"{r.algorithm:>20}: {' > '.join(r.order)}  (tie-breaks: {r.tie_breaks})")
    print()
    print(" " * 21 + " ".join(f"{r.algorithm[:8]:>8}" for r in rankings))
    for x in rankings:
        print(f"{x.algorithm:>20} " + " ".join(f"{kendall_tau(x, y):8.3f}" for y in rankings))


if __name__ == "__main__":
    main()
