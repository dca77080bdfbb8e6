"""Turn score vectors into rankings and compare them with Kendall's tau."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from linkrank.solver import RankVector

__all__ = ["Ranking", "to_ranking", "ranking_from_scores", "kendall_tau", "TIE_TOLERANCE"]

TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Ranking:
    order: tuple[str, ...]
    algorithm: str = ""
    tie_breaks: int = 0

    def __len__(self):
        return len(self.order)

    def position(self) -> dict[str, int]:
        return {lab: k for k, lab in enumerate(self.order)}


def ranking_from_scores(
    scores: Sequence[float],
    labels: Sequence[str],
    algorithm: str = "",
    tie_tolerance: float = TIE_TOLERANCE,
) -> Ranking:
    """Order labels by descending score.

    Runs of scores within ``tie_tolerance`` of the run's leading (highest)
    score count as ties and are ordered by node index. ``tie_breaks`` is
    the number of nodes placed by index rather than by score.
    """
    scores = np.asarray(scores, dtype=float)
    by_score = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    order: list[int] = []
    tie_breaks = 0
    k = 0
    while k < len(by_score):
        head = scores[by_score[k]]
        j = k + 1
        while j < len(by_score) and head - scores[by_score[j]] <= tie_tolerance:
            j += 1
        group = sorted(by_score[k:j])
        tie_breaks += len(group) - 1
        order.extend(group)
        k = j
    return Ranking(tuple(labels[i] for i in order), algorithm, tie_breaks)


def to_ranking(rv: RankVector, tie_tolerance: float = TIE_TOLERANCE) -> Ranking:
    return ranking_from_scores(rv.scores, rv.labels, rv.algorithm, tie_tolerance)


def kendall_tau(x: Ranking, y: Ranking) -> float:
    """``(concordant - discordant) / (n(n-1)/2)`` over all node pairs."""
    if len(set(x.order)) != len(x.order) or len(set(y.order)) != len(y.order):
        raise ValueError("rankings must not repeat nodes")
    if set(x.order) != set(y.order):
        raise ValueError("rankings cover different node sets")
    n = len(x.order)
    if n < 2:
        raise ValueError("kendall_tau needs at least two nodes")
    py = y.position()
    ranks = [py[lab] for lab in x.order]
    s = 0
    for i, j in combinations(range(n), 2):
        # i precedes j in x; concordant iff the same holds in y
        s += 1 if ranks[i] < ranks[j] else -1
    return s / (n * (n - 1) / 2)
