"""Radial CCR efficiency, exclusion-based super-efficiency and the non-radial
omega model, all input-oriented envelopment forms.

The IRS variant adds ``sum(lambda) >= 1`` to the CRS envelopment program.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .lp import LinearProgram, Status, solve
from .model import DecisionMatrix, normalize, require_valid
from .ranking import Direction, Ranking, rank_scores


class ReturnsToScale(enum.Enum):
    CRS = "crs"
    IRS = "irs"


class DeaModel(enum.Enum):
    CCR = "ccr"
    SUPER_EFFICIENCY = "super"
    NON_RADIAL = "nonradial"


class SolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class EfficiencyResult:
    dmu: int
    score: float | None
    intensities: NDArray[np.float64] | None
    model: DeaModel
    rts: ReturnsToScale | None
    excluded_self: bool
    status: Status

    @property
    def feasible(self) -> bool:
        return self.status is Status.OPTIMAL


def _check_index(matrix: DecisionMatrix, p: int) -> None:
    if not 0 <= p < matrix.n:
        raise IndexError(f"DMU index {p} out of range for {matrix.n} DMUs")


def _radial(matrix: DecisionMatrix, p: int, rts: ReturnsToScale, exclude_self: bool):
    X, Y = matrix.inputs, matrix.outputs
    n = matrix.n
    # variables: theta, lambda_1..lambda_n
    c = np.zeros(n + 1)
    c[0] = 1.0
    bounds = [(None, None)] + [(0.0, None)] * n
    if exclude_self:
        bounds[1 + p] = (0.0, 0.0)
    lp = LinearProgram(c, bounds=bounds)
    for i in range(X.shape[1]):
        lp.add_constraint(np.concatenate([[-X[p, i]], X[:, i]]), "<=", 0.0)
    for r in range(Y.shape[1]):
        lp.add_constraint(np.concatenate([[0.0], Y[:, r]]), ">=", Y[p, r])
    if rts is ReturnsToScale.IRS:
        lp.add_constraint(np.concatenate([[0.0], np.ones(n)]), ">=", 1.0)
    return solve(lp)


def ccr_efficiency(matrix: DecisionMatrix, p: int, rts: ReturnsToScale | str = ReturnsToScale.CRS) -> EfficiencyResult:
    """Input-oriented radial efficiency of DMU ``p`` with itself in the reference set.

    Solves::

        min theta
        s.t. sum_j lambda_j x_ij <= theta x_ip   (all inputs i)
             sum_j lambda_j y_rj >= y_rp         (all outputs r)
             sum_j lambda_j >= 1                 (IRS only)
             lambda >= 0
    """
    rts = ReturnsToScale(rts)
    require_valid(matrix)
    _check_index(matrix, p)
    sol = _radial(matrix, p, rts, exclude_self=False)
    if not sol.optimal:
        # lambda_p = 1, theta = 1 is always feasible and theta is bounded below by 0
        raise SolverError(f"CCR program for DMU {p} returned {sol.status.value}")
    return EfficiencyResult(p, float(sol.x[0]), sol.x[1:].copy(), DeaModel.CCR, rts, False, sol.status)


def super_efficiency(matrix: DecisionMatrix, p: int, rts: ReturnsToScale | str = ReturnsToScale.CRS) -> EfficiencyResult:
    """Radial efficiency of DMU ``p`` against the frontier of the other DMUs.

    Same program as :func:`ccr_efficiency` with ``lambda_p`` fixed at 0, so
    the score may exceed 1. An infeasible program is reported through
    ``status`` with ``score=None``.
    """
    rts = ReturnsToScale(rts)
    require_valid(matrix)
    _check_index(matrix, p)
    if matrix.n < 2:
        raise ValueError("super-efficiency needs at least two DMUs")
    sol = _radial(matrix, p, rts, exclude_self=True)
    if not sol.optimal:
        return EfficiencyResult(p, None, None, DeaModel.SUPER_EFFICIENCY, rts, True, sol.status)
    return EfficiencyResult(p, float(sol.x[0]), sol.x[1:].copy(), DeaModel.SUPER_EFFICIENCY, rts, True, sol.status)


def saati_nonradial(matrix: DecisionMatrix, p: int, exclude_self: bool = False) -> EfficiencyResult:
    """Non-radial omega model on column-max normalized data.

    Solves ``min omega`` subject to ``sum_j lambda_j x'_ij <= x'_ip + omega``
    and ``sum_j lambda_j y'_rj >= y'_rp - omega`` with omega free, and
    reports ``omega + 1``. Without exclusion the score is at most 1.
    """
    _check_index(matrix, p)
    norm = normalize(matrix)
    X, Y = norm.inputs, norm.outputs
    n = matrix.n
    # variables: omega, lambda_1..lambda_n
    c = np.zeros(n + 1)
    c[0] = 1.0
    bounds = [(None, None)] + [(0.0, None)] * n
    if exclude_self:
        bounds[1 + p] = (0.0, 0.0)
    lp = LinearProgram(c, bounds=bounds)
    for i in range(X.shape[1]):
        lp.add_constraint(np.concatenate([[-1.0], X[:, i]]), "<=", X[p, i])
    for r in range(Y.shape[1]):
        lp.add_constraint(np.concatenate([[1.0], Y[:, r]]), ">=", Y[p, r])
    sol = solve(lp)
    if not sol.optimal:
        raise SolverError(f"non-radial program for DMU {p} returned {sol.status.value}")
    return EfficiencyResult(p, float(sol.x[0]) + 1.0, sol.x[1:].copy(), DeaModel.NON_RADIAL, None, exclude_self, sol.status)


def rank_results(matrix: DecisionMatrix, results: list[EfficiencyResult], method: str) -> Ranking:
    """Higher efficiency ranks first; infeasible super-efficiency ranks best."""
    return rank_scores(matrix.names, [r.score for r in results], Direction.HIGHER_BETTER, method)
