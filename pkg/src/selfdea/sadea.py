"""Self-assessment fuzzy DEA.

Each DMU is compared with a single fuzzy DMU living in its own effective
space: inputs anywhere in ``[0, x'_p]``, outputs anywhere in ``[y'_p, 1]``
(column-max normalized units). Linear membership functions grade how far
the fuzzy point moves from DMU p, and the LP maximizes the smallest grade
``alpha``. The reported score is ``1 - alpha``; lower is better.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ._workers import map_dmus
from .classic import SolverError
from .lp import LinearProgram, solve
from .model import DecisionMatrix, NormalizedMatrix, normalize
from .ranking import Direction, Ranking, TIE_TOL, rank_scores

DOMAIN_TOL = 1e-12


class Membership(enum.Enum):
    """Direction of the input membership.

    ``CORRECTED`` grades full satisfaction at zero input, ``LITERAL`` at the
    observed input.
    """

    CORRECTED = "corrected"
    LITERAL = "literal"


class MembershipKind(enum.Enum):
    INPUT_LINEAR = "input"
    OUTPUT_LINEAR = "output"


@dataclass(frozen=True)
class MembershipFunction:
    """Affine grade between an anchor of zero and an anchor of full satisfaction.

    ``degree(v) = (v - zero_at) / (full_at - zero_at)`` on the closed interval
    spanned by the anchors. When both anchors coincide the function is
    degenerate: its grade is taken as 1 and the LP drops its constraint.
    """

    kind: MembershipKind
    zero_at: float
    full_at: float

    @property
    def degenerate(self) -> bool:
        return self.zero_at == self.full_at

    @property
    def domain(self) -> tuple[float, float]:
        return min(self.zero_at, self.full_at), max(self.zero_at, self.full_at)

    def degree(self, v: float) -> float:
        lo, hi = self.domain
        if not lo - DOMAIN_TOL <= v <= hi + DOMAIN_TOL:
            raise ValueError(f"{v} outside membership domain [{lo}, {hi}]")
        if self.degenerate:
            return 1.0
        return min(1.0, max(0.0, (v - self.zero_at) / (self.full_at - self.zero_at)))

    def slope_intercept(self) -> tuple[float, float]:
        """``(a, b)`` with ``degree(v) = a * v + b``."""
        a = 1.0 / (self.full_at - self.zero_at)
        return a, -self.zero_at * a


def input_membership_function(xp: float, membership: Membership = Membership.CORRECTED) -> MembershipFunction:
    if xp <= 0:
        raise ValueError("normalized input must be positive")
    if Membership(membership) is Membership.LITERAL:
        return MembershipFunction(MembershipKind.INPUT_LINEAR, zero_at=0.0, full_at=xp)
    return MembershipFunction(MembershipKind.INPUT_LINEAR, zero_at=xp, full_at=0.0)


def output_membership_function(yp: float) -> MembershipFunction:
    if not 0.0 <= yp <= 1.0:
        raise ValueError("normalized output must lie in [0, 1]")
    return MembershipFunction(MembershipKind.OUTPUT_LINEAR, zero_at=yp, full_at=1.0)


def input_membership(xbar: float, xp: float, membership: Membership = Membership.CORRECTED) -> float:
    """Grade of a fuzzy input ``xbar`` in ``[0, xp]``: ``(xp - xbar) / xp``."""
    return input_membership_function(xp, membership).degree(xbar)


def output_membership(ybar: float, yp: float) -> float:
    """Grade of a fuzzy output ``ybar`` in ``[yp, 1]``: ``(ybar - yp) / (1 - yp)``.

    At ``yp == 1`` the function is degenerate and the grade is 1.
    """
    return output_membership_function(yp).degree(ybar)


@dataclass(frozen=True)
class SadeaResult:
    dmu: int
    alpha: float
    score: float
    fuzzy_inputs: NDArray[np.float64]
    fuzzy_outputs: NDArray[np.float64]
    lam: float
    w: float
    degenerate_outputs: frozenset[int]


def _score_normalized(xp: NDArray, yp: NDArray, p: int, membership: Membership) -> SadeaResult:
    m, s = xp.size, yp.size
    # variables: alpha, lambda, w, xbar_1..xbar_m, ybar_1..ybar_s
    A, L, W, XB, YB = 0, 1, 2, 3, 3 + m
    nv = 3 + m + s
    c = np.zeros(nv)
    c[A] = 1.0
    bounds: list = [(None, None), (0.0, None), (None, None)]
    bounds += [(0.0, float(v)) for v in xp]
    bounds += [(float(v), 1.0) for v in yp]
    lp = LinearProgram(c, maximize=True, bounds=bounds)

    def row(coeffs: dict[int, float]) -> NDArray:
        out = np.zeros(nv)
        for k, v in coeffs.items():
            out[k] = v
        return out

    for i in range(m):
        # lambda x'_ip - xbar_i - w <= 0
        lp.add_constraint(row({L: xp[i], XB + i: -1.0, W: -1.0}), "<=", 0.0)
        # alpha <= a * xbar_i + b
        a, b = input_membership_function(float(xp[i]), membership).slope_intercept()
        lp.add_constraint(row({A: 1.0, XB + i: -a}), "<=", b)
    degenerate = set()
    for r in range(s):
        # lambda y'_rp - ybar_r + w >= 0
        lp.add_constraint(row({L: yp[r], YB + r: -1.0, W: 1.0}), ">=", 0.0)
        f = output_membership_function(float(yp[r]))
        if f.degenerate:
            degenerate.add(r)
            continue
        a, b = f.slope_intercept()
        lp.add_constraint(row({A: 1.0, YB + r: -a}), "<=", b)
    # alpha <= 1 - w
    lp.add_constraint(row({A: 1.0, W: 1.0}), "<=", 1.0)

    sol = solve(lp)
    if not sol.optimal:
        raise SolverError(f"SADEA program for DMU {p} returned {sol.status.value}")
    x = sol.x
    alpha = float(x[A])
    return SadeaResult(
        dmu=p,
        alpha=alpha,
        score=1.0 - alpha,
        fuzzy_inputs=x[XB:XB + m].copy(),
        fuzzy_outputs=x[YB:YB + s].copy(),
        lam=float(x[L]),
        w=float(x[W]),
        degenerate_outputs=frozenset(degenerate),
    )


def sadea_score(
    matrix: DecisionMatrix | NormalizedMatrix,
    p: int,
    membership: Membership | str = Membership.CORRECTED,
) -> SadeaResult:
    """Self-assessment score of DMU ``p`` (lower is better).

    Normalization maxima always come from the full dataset.
    """
    norm = matrix if isinstance(matrix, NormalizedMatrix) else normalize(matrix)
    n = norm.shape[0]
    if not 0 <= p < n:
        raise IndexError(f"DMU index {p} out of range for {n} DMUs")
    return _score_normalized(norm.inputs[p], norm.outputs[p], p, Membership(membership))


def sadea_scores(
    matrix: DecisionMatrix,
    membership: Membership | str = Membership.CORRECTED,
    jobs: int = 1,
) -> list[SadeaResult]:
    norm = normalize(matrix)
    return map_dmus(sadea_score, norm, range(matrix.n), jobs, membership=Membership(membership))


def sadea_rank(
    matrix: DecisionMatrix,
    membership: Membership | str = Membership.CORRECTED,
    jobs: int = 1,
    tie_tol: float = TIE_TOL,
) -> Ranking:
    """Rank every DMU by ascending self-assessment score."""
    results = sadea_scores(matrix, membership, jobs)
    return rank_scores(matrix.names, [r.score for r in results], Direction.LOWER_BETTER, "sadea", tie_tol)
