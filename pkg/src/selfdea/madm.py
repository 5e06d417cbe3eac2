"""Max-min (with iterated elimination for a full ranking) and TOPSIS."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .model import DecisionMatrix, require_valid
from .ranking import Direction, Ranking, TIE_TOL, rank_scores, rank_sequence


def attribute_ratios(matrix: DecisionMatrix) -> NDArray[np.float64]:
    """Dimensionless h-matrix: ``r / max`` for benefits, ``min / r`` for costs."""
    R = matrix.values
    cost = matrix.is_cost
    col_max = R.max(axis=0)
    if np.any(col_max[~cost] <= 0):
        raise ValueError("degenerate attribute column: benefit column is all zero")
    return np.where(cost, R.min(axis=0) / np.where(cost, R, 1.0), R / np.where(cost, 1.0, col_max))


def maxmin_scores(matrix: DecisionMatrix) -> NDArray[np.float64]:
    """Worst normalized attribute of each alternative."""
    require_valid(matrix)
    return attribute_ratios(matrix).min(axis=1)


@dataclass(frozen=True)
class MaxminLevel:
    survivors: tuple[int, ...]
    scores: NDArray[np.float64]
    selected: tuple[int, ...]
    best: float

    def to_dict(self, names: Sequence[str]) -> dict[str, Any]:
        return {
            "selected": [names[j] for j in self.selected],
            "score": self.best,
            "scores": {names[j]: float(v) for j, v in zip(self.survivors, self.scores)},
        }


@dataclass(frozen=True)
class MaxminTrace:
    levels: tuple[MaxminLevel, ...]
    ranking: Ranking

    def to_dict(self, names: Sequence[str]) -> list[dict[str, Any]]:
        return [lv.to_dict(names) for lv in self.levels]


def maxmin_full_ranking(matrix: DecisionMatrix, tie_tol: float = TIE_TOL) -> MaxminTrace:
    """Select the max-min alternative, drop it, renormalize the rest, repeat.

    Exact ties (within ``tie_tol``) are selected together as one group.
    """
    require_valid(matrix)
    alive = list(range(matrix.n))
    levels = []
    level_score: list[float | None] = [None] * matrix.n
    while alive:
        scores = attribute_ratios(matrix.subset(alive)).min(axis=1)
        best = float(scores.max())
        picked = tuple(alive[k] for k in np.nonzero(scores >= best - tie_tol * max(1.0, abs(best)))[0])
        levels.append(MaxminLevel(tuple(alive), scores, picked, best))
        for j in picked:
            level_score[j] = float(scores[alive.index(j)])
        alive = [j for j in alive if j not in picked]
    ranking = rank_sequence(matrix.names, level_score, [lv.selected for lv in levels], Direction.HIGHER_BETTER, "maxmin")
    return MaxminTrace(tuple(levels), ranking)


@dataclass(frozen=True)
class TopsisResult:
    names: tuple[str, ...]
    normalized: NDArray[np.float64]
    weighted: NDArray[np.float64]
    ideal: NDArray[np.float64]
    anti_ideal: NDArray[np.float64]
    s_plus: NDArray[np.float64]
    s_minus: NDArray[np.float64]
    closeness: NDArray[np.float64]

    def ranking(self, tie_tol: float = TIE_TOL) -> Ranking:
        return rank_scores(self.names, list(self.closeness), Direction.HIGHER_BETTER, "topsis", tie_tol)


def equal_weights(matrix: DecisionMatrix) -> NDArray[np.float64]:
    k = len(matrix.labels)
    return np.full(k, 1.0 / k)


def topsis(matrix: DecisionMatrix, weights: ArrayLike | None = None) -> TopsisResult:
    """Closeness of each alternative to the ideal point.

    Vector normalization per attribute, weighting, ideal and anti-ideal
    taken per column (min for costs, max for benefits and vice versa),
    Euclidean distances, then ``C = S- / (S+ + S-)``.
    """
    require_valid(matrix)
    R = matrix.values
    w = equal_weights(matrix) if weights is None else np.asarray(weights, dtype=float).ravel()
    if w.size != R.shape[1]:
        raise ValueError(f"expected {R.shape[1]} weights, got {w.size}")
    if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-9:
        raise ValueError("weights must be nonnegative and sum to 1")
    norms = np.sqrt((R ** 2).sum(axis=0))
    if np.any(norms == 0):
        raise ValueError("all-zero attribute column cannot be normalized")
    N = R / norms
    V = N * w
    cost = matrix.is_cost
    ideal = np.where(cost, V.min(axis=0), V.max(axis=0))
    anti = np.where(cost, V.max(axis=0), V.min(axis=0))
    s_plus = np.sqrt(((V - ideal) ** 2).sum(axis=1))
    s_minus = np.sqrt(((V - anti) ** 2).sum(axis=1))
    total = s_plus + s_minus
    # both distances vanish only when every alternative coincides with both reference points
    C = np.divide(s_minus, total, out=np.full_like(total, 0.5), where=total > 0)
    return TopsisResult(matrix.names, N, V, ideal, anti, s_plus, s_minus, C)
