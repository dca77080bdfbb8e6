"""Weighted PageRank: rank flows along each out-link in proportion to the
popularity (in- and out-degree) of the target among the source's references.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from linkrank.errors import GraphError
from linkrank.graph import DirectedGraph, NodeLike
from linkrank.solver import IterationTrace, RankVector, SolverConfig, iterate

__all__ = [
    "LinkWeightTable",
    "link_weights",
    "in_weight",
    "out_weight",
    "wpr_update",
    "weighted_pagerank",
]


@dataclass(frozen=True)
class LinkWeightTable:
    """Per-edge popularity weights keyed by ``(src_index, dst_index)``."""

    w_in: dict[tuple[int, int], float]
    w_out: dict[tuple[int, int], float]

    def product(self, m: int, n: int) -> float:
        return self.w_in[m, n] * self.w_out[m, n]


def _split(degrees, targets):
    total = sum(degrees[p] for p in targets)
    if total == 0:
        share = 1.0 / len(targets)
        return {p: share for p in targets}
    return {p: degrees[p] / total for p in targets}


def link_weights(g: DirectedGraph) -> LinkWeightTable:
    """Compute in/out link weights for every edge.

    ``W_in(m, n) = I_n / sum(I_p for p in refs(m))`` and likewise with
    out-degrees. A zero denominator falls back to an equal split over
    ``refs(m)`` so each source's weights still sum to one.
    """
    ideg, odeg = g.in_degrees(), g.out_degrees()
    w_in, w_out = {}, {}
    for m, refs in enumerate(g.out_adj):
        if not refs:
            continue
        for n, w in _split(ideg, refs).items():
            w_in[m, n] = w
        for n, w in _split(odeg, refs).items():
            w_out[m, n] = w
    return LinkWeightTable(w_in, w_out)


def _edge(g, m, n):
    mi, ni = g.index_of(m), g.index_of(n)
    if ni not in g.out_adj[mi]:
        raise GraphError(f"({g.labels[mi]!r}, {g.labels[ni]!r}) is not an edge")
    return mi, ni


def in_weight(g: DirectedGraph, m: NodeLike, n: NodeLike) -> float:
    mi, ni = _edge(g, m, n)
    return _split(g.in_degrees(), g.out_adj[mi])[ni]


def out_weight(g: DirectedGraph, m: NodeLike, n: NodeLike) -> float:
    mi, ni = _edge(g, m, n)
    return _split(g.out_degrees(), g.out_adj[mi])[ni]


def wpr_update(incoming: Iterable[tuple[float, float, float]], damping: float) -> float:
    """``(1-d) + d * sum(rank * w_in * w_out)`` over ``(rank, w_in, w_out)`` triples."""
    return (1.0 - damping) + damping * sum(r * wi * wo for r, wi, wo in incoming)


def weighted_pagerank(
    g: DirectedGraph, config: Optional[SolverConfig] = None
) -> tuple[RankVector, IterationTrace]:
    config = config or SolverConfig()
    table = link_weights(g)
    d = config.damping
    # weights are static, so each node's incoming (source, w_in * w_out) list is built once
    incoming = [
        [(m, table.product(m, n)) for m in g.in_adj[n]] for n in range(g.node_count)
    ]

    def rule(node, wpr):
        return (1.0 - d) + d * sum(wpr[m] * w for m, w in incoming[node])

    return iterate(rule, range(g.node_count), config, algorithm="wpr", labels=g.labels)
