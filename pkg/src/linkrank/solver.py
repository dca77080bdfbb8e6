"""Fixed-point iteration chassis shared by the ranking algorithms.

Two sweep modes are supported. ``sequential`` (Gauss-Seidel) updates nodes
in place so later nodes in a sweep see values already refreshed in that
sweep; this is the mode that reproduces hand-iterated PageRank tables.
``synchronous`` (Jacobi) computes every node from the previous sweep's
vector.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from linkrank.errors import NonFiniteScoreError

__all__ = [
    "UpdateMode",
    "SolverConfig",
    "RankVector",
    "IterationTrace",
    "iterate",
    "l1_delta",
]


class UpdateMode(str, enum.Enum):
    SEQUENTIAL = "sequential"
    SYNCHRONOUS = "synchronous"


@dataclass(frozen=True)
class SolverConfig:
    damping: float = 0.85
    tolerance: float = 1e-8
    max_iterations: int = 100
    update_mode: UpdateMode = UpdateMode.SEQUENTIAL
    initial_value: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "update_mode", UpdateMode(self.update_mode))
        if not 0.0 <= self.damping <= 1.0:
            raise ValueError(f"damping must lie in [0, 1], got {self.damping}")
        if not self.tolerance > 0.0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ValueError(f"max_iterations must be an integer >= 1, got {self.max_iterations}")
        if not math.isfinite(self.initial_value):
            raise ValueError(f"initial_value must be finite, got {self.initial_value}")

    def replace(self, **changes) -> "SolverConfig":
        return SolverConfig(**{**asdict(self), **changes})

    def to_dict(self) -> dict:
        d = asdict(self)
        d["update_mode"] = self.update_mode.value
        return d


@dataclass
class RankVector:
    scores: np.ndarray
    labels: tuple[str, ...]
    algorithm: str
    converged: bool
    iterations_used: int

    def __post_init__(self):
        self.scores = np.asarray(self.scores, dtype=float)
        if self.scores.shape != (len(self.labels),):
            raise ValueError("one score per node is required")

    def as_dict(self) -> dict[str, float]:
        return {lab: float(s) for lab, s in zip(self.labels, self.scores)}

    def __getitem__(self, label: str) -> float:
        return float(self.scores[self.labels.index(label)])


@dataclass
class IterationTrace:
    """Score vector after each sweep; ``snapshots[0]`` is the initial state."""

    snapshots: list[np.ndarray] = field(default_factory=list)
    deltas: list[float] = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.deltas)

    def rows(self, labels: Sequence[str]):
        """Yield ``(iteration, label, value)`` in snapshot-major order."""
        for k, snap in enumerate(self.snapshots):
            for lab, v in zip(labels, snap):
                yield k, lab, float(v)


def l1_delta(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.abs(a - b).sum())


UpdateRule = Callable[[int, np.ndarray], float]


def iterate(
    update_rule: UpdateRule,
    node_order: Sequence[int],
    config: SolverConfig,
    *,
    algorithm: str = "custom",
    labels: Optional[Sequence[str]] = None,
    initial: Optional[np.ndarray] = None,
) -> tuple[RankVector, IterationTrace]:
    """Run sweeps of ``update_rule`` until the L1 change drops below tolerance.

    ``update_rule(node, scores)`` returns the new score of ``node``. In
    sequential mode ``scores`` is the vector being updated in place; in
    synchronous mode it is a read-only copy of the previous sweep. The
    vector length is ``len(node_order)`` and ``node_order`` must be a
    permutation of ``range(len(node_order))``.

    Reaching ``config.max_iterations`` is not an error: the result comes
    back with ``converged=False``.
    """
    n = len(node_order)
    if sorted(node_order) != list(range(n)):
        raise ValueError("node_order must be a permutation of 0..N-1")
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = tuple(labels)

    if initial is None:
        x = np.full(n, float(config.initial_value))
    else:
        x = np.array(initial, dtype=float)
        if x.shape != (n,):
            raise ValueError("initial vector has wrong length")

    trace = IterationTrace(snapshots=[x.copy()])
    sequential = config.update_mode is UpdateMode.SEQUENTIAL
    converged = False

    for sweep in range(1, config.max_iterations + 1):
        prev = x.copy()
        if sequential:
            for node in node_order:
                x[node] = _checked(update_rule(node, x), node, sweep, labels)
        else:
            prev.setflags(write=False)
            new = np.empty(n)
            for node in node_order:
                new[node] = _checked(update_rule(node, prev), node, sweep, labels)
            x = new
            prev = prev.copy()
        delta = l1_delta(x, prev)
        trace.snapshots.append(x.copy())
        trace.deltas.append(delta)
        if delta < config.tolerance:
            converged = True
            break

    rv = RankVector(
        scores=x,
        labels=labels,
        algorithm=algorithm,
        converged=converged,
        iterations_used=trace.iterations,
    )
    return rv, trace


def _checked(value, node, sweep, labels):
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteScoreError(labels[node], sweep, value)
    return value
