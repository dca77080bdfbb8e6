"""EigenRumor-style ranking of objects (blog entries) from the agents linked to them.

Agents relate to objects through two kinds of links: *provision* (the agent
authored the object) and *evaluation* (the agent linked to or endorsed it).
With 0/1 incidence matrices ``P`` and ``E`` (agents x objects) each sweep
computes::

    r = mixing * P.T @ a + (1 - mixing) * E.T @ h    # object scores
    a = P @ r                                        # agent authority
    h = E @ r                                        # agent hub

normalizing every vector to unit L2 length. An object nobody has evaluated
yet still scores through the authority of whoever provisioned it.

The exact constants of the original model are not recoverable from a
prose description; this is the smallest linear system with those
properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from linkrank.errors import DegenerateVectorError, EdgeListError, GraphError
from linkrank.solver import SolverConfig, l1_delta

__all__ = [
    "AgentObjectGraph",
    "EigenRumorScores",
    "build_agent_object_graph",
    "parse_agent_object_list",
    "read_agent_object_list",
    "eigenrumor",
    "eigenrumor_sweep",
]

PROVISION = "P"
EVALUATION = "E"


@dataclass(frozen=True, eq=False)
class AgentObjectGraph:
    agents: tuple[str, ...]
    objects: tuple[str, ...]
    provision_edges: frozenset[tuple[int, int]]
    evaluation_edges: frozenset[tuple[int, int]]

    def incidence(self) -> tuple[np.ndarray, np.ndarray]:
        """Return the ``(P, E)`` 0/1 matrices, agents by objects."""
        p = np.zeros((len(self.agents), len(self.objects)))
        e = np.zeros_like(p)
        for i, j in self.provision_edges:
            p[i, j] = 1.0
        for i, j in self.evaluation_edges:
            e[i, j] = 1.0
        return p, e


def build_agent_object_graph(triples: Iterable[tuple[str, str, str]]) -> AgentObjectGraph:
    """Build from ``(agent, kind, object)`` triples, ``kind`` being ``"P"`` or ``"E"``.

    Agents and objects are indexed in first-appearance order and live in
    separate namespaces, so one label may name both an agent and an object.
    """
    agents: dict[str, int] = {}
    objects: dict[str, int] = {}
    prov, evals = set(), set()
    for agent, kind, obj in triples:
        if not agent or not obj:
            raise GraphError("agent and object labels must be non-empty")
        i = agents.setdefault(agent, len(agents))
        j = objects.setdefault(obj, len(objects))
        if kind == PROVISION:
            prov.add((i, j))
        elif kind == EVALUATION:
            evals.add((i, j))
        else:
            raise GraphError(f"unknown link kind {kind!r}; expected 'P' or 'E'")
    if not prov:
        raise GraphError("agent-object graph needs at least one provision edge")
    return AgentObjectGraph(tuple(agents), tuple(objects), frozenset(prov), frozenset(evals))


def parse_agent_object_list(text: str) -> list[tuple[str, str, str]]:
    """Parse ``agent<TAB>P|E<TAB>object`` lines; ``#`` comments and blanks skipped."""
    triples = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.strip().split("\t")
        if len(fields) != 3:
            raise EdgeListError(lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        agent, kind, obj = (f.strip() for f in fields)
        if kind not in (PROVISION, EVALUATION):
            raise EdgeListError(lineno, f"unknown link kind {kind!r}; expected 'P' or 'E'")
        triples.append((agent, kind, obj))
    return triples


def read_agent_object_list(path) -> AgentObjectGraph:
    with open(path, encoding="utf-8", newline="") as fh:
        return build_agent_object_graph(parse_agent_object_list(fh.read()))


@dataclass
class EigenRumorScores:
    objects: tuple[str, ...]
    agents: tuple[str, ...]
    object_score: np.ndarray
    agent_authority: np.ndarray
    agent_hub: np.ndarray
    converged: bool
    iterations_used: int
    degenerate: tuple[str, ...] = ()
    history: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default_factory=list, repr=False)


def _normalized(v, name, allow_zero=False):
    norm = np.linalg.norm(v)
    if norm == 0.0:
        if allow_zero:
            return v
        raise DegenerateVectorError(name)
    return v / norm


def eigenrumor_sweep(p, e, a, h, mixing, hub_needed=True):
    """One sweep from agent scores ``(a, h)``; returns normalized ``(r, a, h)``.

    If one of the two object-score terms is identically zero the other is
    used alone. A zero hub vector is tolerated only when ``hub_needed`` is
    false, i.e. when ``mixing == 1`` and hubs never feed back.
    """
    prov_term = p.T @ a
    eval_term = e.T @ h
    if not prov_term.any():
        r = eval_term
    elif not eval_term.any():
        r = prov_term
    else:
        r = mixing * prov_term + (1.0 - mixing) * eval_term
    r = _normalized(r, "object_score")
    a = _normalized(p @ r, "agent_authority")
    h = _normalized(e @ r, "agent_hub", allow_zero=not hub_needed)
    return r, a, h


def eigenrumor(
    bg: AgentObjectGraph,
    mixing: float = 0.5,
    config: Optional[SolverConfig] = None,
    record: bool = False,
) -> EigenRumorScores:
    """Score objects and agents by iterating :func:`eigenrumor_sweep`.

    Agent authority and hub start uniform with unit L2 norm. Stops once the
    L1 change of the stacked ``(r, a, h)`` vector is below
    ``config.tolerance``. ``config.damping`` is unused.

    Raises:
        DegenerateVectorError: a score vector became all-zero, e.g. the hub
            vector when there are no evaluation links and ``mixing < 1``.
    """
    if not 0.0 <= mixing <= 1.0:
        raise ValueError(f"mixing must lie in [0, 1], got {mixing}")
    config = config or SolverConfig()
    p, e = bg.incidence()
    n_agents, n_objects = p.shape
    hub_needed = mixing < 1.0

    a = np.full(n_agents, 1.0 / np.sqrt(n_agents))
    h = a.copy()
    r = np.zeros(n_objects)
    history = [(r.copy(), a.copy(), h.copy())] if record else []
    converged = False
    sweeps = 0
    for sweeps in range(1, config.max_iterations + 1):
        r_new, a_new, h_new = eigenrumor_sweep(p, e, a, h, mixing, hub_needed)
        delta = l1_delta(r_new, r) + l1_delta(a_new, a) + l1_delta(h_new, h)
        r, a, h = r_new, a_new, h_new
        if record:
            history.append((r.copy(), a.copy(), h.copy()))
        if delta < config.tolerance:
            converged = True
            break

    return EigenRumorScores(
        objects=bg.objects,
        agents=bg.agents,
        object_score=r,
        agent_authority=a,
        agent_hub=h,
        converged=converged,
        iterations_used=sweeps,
        degenerate=() if h.any() else ("agent_hub",),
        history=history,
    )
