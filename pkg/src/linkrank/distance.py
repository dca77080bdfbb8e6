"""Distance-based ranking: pages near a seed set in log-branching distance rank high.

Following an out-link of page ``i`` costs ``log10(out_degree(i))``, so a
path through pages with few links is short. Scores are ``1 / (1 + dist)``
and unreachable pages score 0.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from linkrank.errors import GraphError
from linkrank.graph import DirectedGraph, NodeLike
from linkrank.solver import RankVector

__all__ = ["DistanceVector", "edge_cost", "distance_rank"]


@dataclass
class DistanceVector:
    labels: tuple[str, ...]
    distance: np.ndarray
    seeds: frozenset[int]

    def as_dict(self) -> dict[str, float]:
        return {lab: float(x) for lab, x in zip(self.labels, self.distance)}


def edge_cost(g: DirectedGraph, src: int) -> float:
    return math.log10(len(g.out_adj[src]))


def distance_rank(g: DirectedGraph, seeds: Iterable[NodeLike]) -> tuple[DistanceVector, RankVector]:
    """Multi-source Dijkstra from ``seeds``; ties settle by lower node index."""
    seed_idx = frozenset(g.index_of(s) for s in seeds)
    if not seed_idx:
        raise GraphError("distance_rank needs at least one seed")

    n = g.node_count
    dist = np.full(n, math.inf)
    heap = []
    for s in sorted(seed_idx):
        dist[s] = 0.0
        heap.append((0.0, s))
    heapq.heapify(heap)
    done = np.zeros(n, dtype=bool)
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if not g.out_adj[u]:
            continue
        w = edge_cost(g, u)
        for v in g.out_adj[u]:
            alt = du + w
            if alt < dist[v]:
                dist[v] = alt
                heapq.heappush(heap, (alt, v))

    scores = np.where(np.isinf(dist), 0.0, 1.0 / (1.0 + dist))
    dv = DistanceVector(labels=g.labels, distance=dist, seeds=seed_idx)
    rv = RankVector(scores=scores, labels=g.labels, algorithm="distance", converged=True, iterations_used=0)
    return dv, rv
