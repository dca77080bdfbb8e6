"""HITS hubs and authorities: base-set sampling plus normalized mutual iteration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from linkrank.errors import GraphError
from linkrank.graph import DirectedGraph, NodeLike, induced_adjacency
from linkrank.solver import SolverConfig, l1_delta

__all__ = [
    "HubAuthScores",
    "expand_root_set",
    "authority_step",
    "hub_step",
    "hits",
]


@dataclass
class HubAuthScores:
    labels: tuple[str, ...]
    hub: np.ndarray
    authority: np.ndarray
    iterations_used: int
    converged: bool
    hub_history: list[np.ndarray] = field(default_factory=list, repr=False)
    authority_history: list[np.ndarray] = field(default_factory=list, repr=False)


def expand_root_set(
    g: DirectedGraph, roots: Iterable[NodeLike], per_node_cap: int = 50
) -> list[int]:
    """Grow ``roots`` into a base set.

    Every successor of each root is added, plus at most ``per_node_cap``
    of its predecessors taken in index order. Returns sorted node indices.
    """
    if per_node_cap < 0:
        raise ValueError("per_node_cap must be >= 0")
    base = set()
    for r in roots:
        i = g.index_of(r)
        base.add(i)
        base.update(g.out_adj[i])
        base.update(g.in_adj[i][:per_node_cap])
    return sorted(base)


def authority_step(adj: np.ndarray, hub: np.ndarray) -> np.ndarray:
    """Unnormalized authorities: each node sums the hubs pointing to it."""
    return adj.T @ hub


def hub_step(adj: np.ndarray, authority: np.ndarray) -> np.ndarray:
    """Unnormalized hubs: each node sums the authorities it points to."""
    return adj @ authority


def _unit(v):
    norm = np.linalg.norm(v)
    return v / norm if norm > 0 else v


def hits(
    g: DirectedGraph,
    nodes: Optional[Iterable[NodeLike]] = None,
    config: Optional[SolverConfig] = None,
    record: bool = False,
) -> HubAuthScores:
    """Run HITS on the subgraph induced by ``nodes`` (all nodes by default).

    Hubs and authorities start at 1. Each sweep recomputes authorities from
    the previous hubs and L2-normalizes them, then hubs from the fresh
    authorities, normalized the same way. Iteration stops when the L1
    change of the stacked ``(hub, authority)`` vector falls below
    ``config.tolerance``. ``config.damping`` is unused.

    With ``record=True`` the initial vectors and every sweep's vectors are
    kept in ``hub_history`` / ``authority_history``.
    """
    config = config or SolverConfig()
    idx = sorted({g.index_of(v) for v in nodes}) if nodes is not None else list(range(g.node_count))
    if not idx:
        raise GraphError("hits needs a non-empty node set")
    adj = induced_adjacency(g, idx)
    if not adj.any():
        raise GraphError("induced subgraph has no edges")

    hub = np.ones(len(idx))
    auth = np.ones(len(idx))
    hub_hist, auth_hist = ([hub.copy()], [auth.copy()]) if record else ([], [])
    converged = False
    sweeps = 0
    for sweeps in range(1, config.max_iterations + 1):
        new_auth = _unit(authority_step(adj, hub))
        new_hub = _unit(hub_step(adj, new_auth))
        delta = l1_delta(new_hub, hub) + l1_delta(new_auth, auth)
        hub, auth = new_hub, new_auth
        if record:
            hub_hist.append(hub.copy())
            auth_hist.append(auth.copy())
        if delta < config.tolerance:
            converged = True
            break

    return HubAuthScores(
        labels=tuple(g.labels[i] for i in idx),
        hub=hub,
        authority=auth,
        iterations_used=sweeps,
        converged=converged,
        hub_history=hub_hist,
        authority_history=auth_hist,
    )
