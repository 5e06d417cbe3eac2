"""Dense two-phase simplex for the small programs built by the DEA models.

Variables may carry any combination of lower/upper bounds, including none
(free variables). Entering and leaving choices follow Bland's rule, so the
solver terminates and gives the same answer for the same program every time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

PIVOT_TOL = 1e-9
FEAS_TOL = 1e-7
_ZERO = 1e-13
MAX_ITER = 50_000

Bound = tuple[float | None, float | None]


class Relation(enum.Enum):
    LE = "<="
    GE = ">="
    EQ = "="

    @classmethod
    def parse(cls, rel: "Relation | str") -> "Relation":
        if isinstance(rel, Relation):
            return rel
        return {"<=": cls.LE, "≤": cls.LE, ">=": cls.GE, "≥": cls.GE, "=": cls.EQ, "==": cls.EQ}[rel]


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LPStructureError(ValueError):
    pass


@dataclass
class LinearProgram:
    """min/max c.x subject to row constraints and per-variable bounds.

    Default bounds are ``(0, None)``; use ``None`` on either side for an
    absent bound.
    """

    objective: NDArray[np.float64]
    maximize: bool = False
    rows: list[NDArray[np.float64]] = field(default_factory=list)
    relations: list[Relation] = field(default_factory=list)
    rhs: list[float] = field(default_factory=list)
    bounds: list[Bound] | None = None

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=float).ravel()
        if self.bounds is None:
            self.bounds = [(0.0, None)] * self.n_vars
        else:
            self.bounds = list(self.bounds)

    @property
    def n_vars(self) -> int:
        return self.objective.size

    def add_constraint(self, coeffs: ArrayLike, relation: Relation | str, rhs: float) -> None:
        row = np.asarray(coeffs, dtype=float).ravel()
        if row.size != self.n_vars:
            raise LPStructureError(f"constraint has {row.size} coefficients, program has {self.n_vars} variables")
        self.rows.append(row)
        self.relations.append(Relation.parse(relation))
        self.rhs.append(float(rhs))

    def set_bounds(self, j: int, lower: float | None, upper: float | None) -> None:
        self.bounds[j] = (lower, upper)

    @property
    def A(self) -> NDArray[np.float64]:
        if not self.rows:
            return np.zeros((0, self.n_vars))
        return np.vstack(self.rows)

    def check(self) -> None:
        n = self.n_vars
        if not (len(self.rows) == len(self.relations) == len(self.rhs)):
            raise LPStructureError("rows, relations and rhs differ in length")
        for row in self.rows:
            if np.asarray(row).size != n:
                raise LPStructureError("coefficient vectors do not share the variable count")
        if len(self.bounds) != n:
            raise LPStructureError(f"{len(self.bounds)} bounds given for {n} variables")
        if not np.all(np.isfinite(self.objective)):
            raise LPStructureError("objective must be finite")
        if self.rows and not np.all(np.isfinite(self.A)):
            raise LPStructureError("constraint coefficients must be finite")
        if not np.all(np.isfinite(self.rhs)):
            raise LPStructureError("rhs values must be finite")
        for j, (lo, hi) in enumerate(self.bounds):
            if lo is not None and hi is not None and lo > hi:
                raise LPStructureError(f"variable {j}: lower bound {lo} exceeds upper bound {hi}")

    def residuals(self, x: ArrayLike) -> NDArray[np.float64]:
        """Constraint violation per row and bound (0 where satisfied)."""
        x = np.asarray(x, dtype=float)
        out = []
        if self.rows:
            ax = self.A @ x
            for v, rel, b in zip(ax, self.relations, self.rhs):
                if rel is Relation.LE:
                    out.append(max(0.0, v - b))
                elif rel is Relation.GE:
                    out.append(max(0.0, b - v))
                else:
                    out.append(abs(v - b))
        for xj, (lo, hi) in zip(x, self.bounds):
            out.append(max(0.0, (lo - xj) if lo is not None else 0.0, (xj - hi) if hi is not None else 0.0))
        return np.array(out)


@dataclass(frozen=True)
class LpSolution:
    status: Status
    objective: float = float("nan")
    x: NDArray[np.float64] | None = None
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def _pivot(T: NDArray, basis: list[int], r: int, c: int) -> None:
    T[r] /= T[r, c]
    col = T[:, c].copy()
    col[r] = 0.0
    T -= np.outer(col, T[r])
    T[np.abs(T) < _ZERO] = 0.0
    basis[r] = c


def _run(T: NDArray, basis: list[int], cost: NDArray, allowed: NDArray[np.bool_], iters: list[int]) -> bool:
    """Minimize cost over the tableau in place. Returns False when unbounded."""
    while True:
        if iters[0] > MAX_ITER:
            raise RuntimeError("simplex iteration limit reached")
        reduced = cost - cost[basis] @ T[:, :-1]
        candidates = np.nonzero(allowed & (reduced < -PIVOT_TOL))[0]
        if candidates.size == 0:
            return True
        c = int(candidates[0])
        col = T[:, c]
        rows = np.nonzero(col > PIVOT_TOL)[0]
        if rows.size == 0:
            return False
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-12 * (1.0 + abs(best))]
        r = int(min(ties, key=lambda i: basis[i]))
        _pivot(T, basis, r, c)
        iters[0] += 1


def _to_standard(lp: LinearProgram):
    """Substitute x = M u + offset with u >= 0; bounded gaps become extra rows."""
    n = lp.n_vars
    cols: list[NDArray] = []
    offset = np.zeros(n)
    extra_rows: list[tuple[int, float]] = []
    for j, (lo, hi) in enumerate(lp.bounds):
        e = np.zeros(n)
        if lo is not None:
            offset[j] = lo
            e[j] = 1.0
            cols.append(e)
            if hi is not None:
                extra_rows.append((len(cols) - 1, hi - lo))
        elif hi is not None:
            offset[j] = hi
            e[j] = -1.0
            cols.append(e)
        else:
            e[j] = 1.0
            cols.append(e)
            cols.append(-e)
    M = np.column_stack(cols) if cols else np.zeros((n, 0))
    A = lp.A @ M
    b = np.asarray(lp.rhs, dtype=float) - lp.A @ offset if lp.rows else np.zeros(0)
    rels = list(lp.relations)
    rows = [A[i] for i in range(A.shape[0])]
    for k, gap in extra_rows:
        row = np.zeros(M.shape[1])
        row[k] = 1.0
        rows.append(row)
        rels.append(Relation.LE)
        b = np.append(b, gap)
    A = np.vstack(rows) if rows else np.zeros((0, M.shape[1]))
    return M, offset, A, b, rels


def solve(lp: LinearProgram) -> LpSolution:
    """Solve ``lp`` with the two-phase simplex method."""
    lp.check()
    M, offset, A, b, rels = _to_standard(lp)
    c_obj = -lp.objective if lp.maximize else lp.objective
    c_std = c_obj @ M
    k, nu = A.shape

    # rows with negative rhs are flipped so the initial basis is feasible
    A = A.copy()
    b = b.copy()
    for i in range(k):
        if b[i] < 0:
            A[i] *= -1
            b[i] *= -1
            rels[i] = {Relation.LE: Relation.GE, Relation.GE: Relation.LE, Relation.EQ: Relation.EQ}[rels[i]]

    n_slack = sum(r is not Relation.EQ for r in rels)
    n_art = sum(r is not Relation.LE for r in rels)
    width = nu + n_slack + n_art
    T = np.zeros((k, width + 1))
    T[:, :nu] = A
    T[:, -1] = b
    basis: list[int] = [0] * k
    s_col, a_col = nu, nu + n_slack
    for i, rel in enumerate(rels):
        if rel is Relation.LE:
            T[i, s_col] = 1.0
            basis[i] = s_col
            s_col += 1
        else:
            if rel is Relation.GE:
                T[i, s_col] = -1.0
                s_col += 1
            T[i, a_col] = 1.0
            basis[i] = a_col
            a_col += 1

    artificial = np.zeros(width, dtype=bool)
    artificial[nu + n_slack:] = True
    iters = [0]

    if n_art:
        phase1 = artificial.astype(float)
        _run(T, basis, phase1, np.ones(width, dtype=bool), iters)
        if phase1[basis] @ T[:, -1] > FEAS_TOL:
            return LpSolution(Status.INFEASIBLE, iterations=iters[0])
        # drive zero-level artificials out of the basis; drop redundant rows
        keep = []
        for i in range(T.shape[0]):
            if artificial[basis[i]]:
                cand = np.nonzero(~artificial & (np.abs(T[i, :-1]) > PIVOT_TOL))[0]
                if cand.size == 0:
                    continue
                _pivot(T, basis, i, int(cand[0]))
            keep.append(i)
        T = T[keep]
        basis = [basis[i] for i in keep]

    cost = np.zeros(width)
    cost[:nu] = c_std
    if not _run(T, basis, cost, ~artificial, iters):
        return LpSolution(Status.UNBOUNDED, iterations=iters[0])

    z = np.zeros(width)
    z[basis] = T[:, -1]
    x = M @ z[:nu] + offset
    value = float(lp.objective @ x)
    return LpSolution(Status.OPTIMAL, value, x, iters[0])


def linprog(
    c: Sequence[float],
    A: Sequence[Sequence[float]] = (),
    relations: Sequence[str] = (),
    b: Sequence[float] = (),
    bounds: Sequence[Bound] | None = None,
    maximize: bool = False,
) -> LpSolution:
    """Convenience wrapper building a :class:`LinearProgram` from arrays."""
    lp = LinearProgram(np.asarray(c, dtype=float), maximize=maximize, bounds=None if bounds is None else list(bounds))
    if not len(A) == len(relations) == len(b):
        raise LPStructureError(f"{len(A)} rows, {len(relations)} relations and {len(b)} right-hand sides")
    for row, rel, rhs in zip(A, relations, b):
        lp.add_constraint(row, rel, rhs)
    return solve(lp)
