"""PageRank in the additive (scores average 1) and normalized (scores sum to 1) forms."""

from __future__ import annotations

import enum
from typing import Optional

import numpy as np

from linkrank.graph import DirectedGraph
from linkrank.solver import IterationTrace, RankVector, SolverConfig, UpdateMode, iterate

__all__ = ["DanglingPolicy", "pagerank", "normalized_pagerank"]


class DanglingPolicy(str, enum.Enum):
    DROP = "drop"
    REDISTRIBUTE = "redistribute"


def pagerank(
    g: DirectedGraph,
    config: Optional[SolverConfig] = None,
    dangling_policy: DanglingPolicy | str = DanglingPolicy.DROP,
) -> tuple[RankVector, IterationTrace]:
    """Iterate ``PR(n) = (1-d) + d * sum(PR(m) / C(m) for m in B(n))``.

    With ``dangling_policy="drop"`` pages without out-links contribute
    nothing. With ``"redistribute"`` each dangling page's score is spread
    evenly over all N pages, read from the live vector at update time.

    Nodes are swept in index order (first appearance in the edge list).
    """
    config = config or SolverConfig()
    policy = DanglingPolicy(dangling_policy)
    d = config.damping
    n = g.node_count
    out_deg = np.array(g.out_degrees(), dtype=float)
    in_adj = g.in_adj
    dangling = [i for i in range(n) if out_deg[i] == 0]
    spread = policy is DanglingPolicy.REDISTRIBUTE and bool(dangling)

    def rule(node, pr):
        s = 0.0
        for m in in_adj[node]:
            s += pr[m] / out_deg[m]
        if spread:
            s += sum(pr[k] for k in dangling) / n
        return (1.0 - d) + d * s

    return iterate(rule, range(n), config, algorithm="pagerank", labels=g.labels)


def normalized_pagerank(
    g: DirectedGraph, config: Optional[SolverConfig] = None
) -> tuple[RankVector, IterationTrace]:
    """Random-surfer PageRank whose scores form a probability distribution.

    ``PR(n) = (1-d)/N + d * (sum(PR(m) / C(m) for m in B(n)) + dangling/N)``
    with synchronous sweeps started from the uniform vector 1/N, so every
    snapshot sums to one. ``config.initial_value`` is ignored. A config in
    sequential mode is rejected since in-place updates break the per-sweep
    sum.
    """
    config = config or SolverConfig(update_mode=UpdateMode.SYNCHRONOUS)
    if config.update_mode is not UpdateMode.SYNCHRONOUS:
        raise ValueError("normalized_pagerank requires update_mode='synchronous'")
    d = config.damping
    n = g.node_count
    out_deg = np.array(g.out_degrees(), dtype=float)
    in_adj = g.in_adj
    dangling = np.flatnonzero(out_deg == 0)

    # Synchronous sweeps read one frozen vector, so the dangling mass is
    # computed once per sweep and keyed on that vector's identity.
    cache = {"id": None, "mass": 0.0}

    def rule(node, pr):
        if cache["id"] is not pr:
            cache["id"] = pr
            cache["mass"] = float(pr[dangling].sum()) if dangling.size else 0.0
        s = 0.0
        for m in in_adj[node]:
            s += pr[m] / out_deg[m]
        return (1.0 - d) / n + d * (s + cache["mass"] / n)

    return iterate(
        rule,
        range(n),
        config,
        algorithm="normalized-pagerank",
        labels=g.labels,
        initial=np.full(n, 1.0 / n),
    )
