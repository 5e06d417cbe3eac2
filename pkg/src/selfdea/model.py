"""Decision-matrix data model, validation and column-max normalization."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

PROPORTIONAL_RTOL = 1e-9


class Role(enum.Enum):
    """Attribute role. Inputs are costs, outputs are benefits."""

    INPUT = "input"
    OUTPUT = "output"

    @classmethod
    def parse(cls, tag: str) -> "Role":
        key = tag.strip().lower()
        if key in ("input", "cost"):
            return cls.INPUT
        if key in ("output", "benefit"):
            return cls.OUTPUT
        raise ValueError(f"unknown role tag {tag!r}")


class ValidationError(ValueError):
    """Raised when an operation needs a valid matrix and gets one with errors."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(str(i) for i in report.errors))


class DegenerateColumnError(ValueError):
    pass


def _frozen(a: ArrayLike) -> NDArray[np.float64]:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class DecisionMatrix:
    """Alternatives (rows) by attributes (columns), each column tagged with a role.

    Arrays are copied and made read-only on construction, so a matrix can be
    shared freely between evaluations.
    """

    names: tuple[str, ...]
    labels: tuple[str, ...]
    roles: tuple[Role, ...]
    values: NDArray[np.float64]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(str(n) for n in self.names))
        object.__setattr__(self, "labels", tuple(str(n) for n in self.labels))
        object.__setattr__(self, "roles", tuple(Role(r) for r in self.roles))
        values = _frozen(self.values)
        if values.ndim != 2:
            values = _frozen(values.reshape(len(self.names), len(self.labels)))
        object.__setattr__(self, "values", values)
        if values.shape != (len(self.names), len(self.labels)):
            raise ValueError(
                f"values shape {values.shape} does not match "
                f"{len(self.names)} names x {len(self.labels)} labels"
            )
        if len(self.roles) != len(self.labels):
            raise ValueError("every attribute needs exactly one role")

    @classmethod
    def from_arrays(
        cls,
        inputs: ArrayLike,
        outputs: ArrayLike,
        names: Sequence[str] | None = None,
        input_labels: Sequence[str] | None = None,
        output_labels: Sequence[str] | None = None,
    ) -> "DecisionMatrix":
        """Build a matrix with all inputs first, then all outputs."""
        x = np.atleast_2d(np.asarray(inputs, dtype=float))
        y = np.atleast_2d(np.asarray(outputs, dtype=float))
        if x.shape[0] != y.shape[0]:
            raise ValueError("inputs and outputs must have the same number of rows")
        n, m = x.shape
        s = y.shape[1]
        names = list(names) if names is not None else [f"DMU{j + 1}" for j in range(n)]
        input_labels = list(input_labels) if input_labels is not None else [f"x{i + 1}" for i in range(m)]
        output_labels = list(output_labels) if output_labels is not None else [f"y{r + 1}" for r in range(s)]
        return cls(
            names=tuple(names),
            labels=tuple(input_labels) + tuple(output_labels),
            roles=(Role.INPUT,) * m + (Role.OUTPUT,) * s,
            values=np.hstack([x, y]),
        )

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def input_columns(self) -> list[int]:
        return [k for k, r in enumerate(self.roles) if r is Role.INPUT]

    @property
    def output_columns(self) -> list[int]:
        return [k for k, r in enumerate(self.roles) if r is Role.OUTPUT]

    @property
    def inputs(self) -> NDArray[np.float64]:
        return self.values[:, self.input_columns]

    @property
    def outputs(self) -> NDArray[np.float64]:
        return self.values[:, self.output_columns]

    @property
    def is_cost(self) -> NDArray[np.bool_]:
        return np.array([r is Role.INPUT for r in self.roles])

    def subset(self, rows: Sequence[int]) -> "DecisionMatrix":
        rows = list(rows)
        return DecisionMatrix(
            names=tuple(self.names[j] for j in rows),
            labels=self.labels,
            roles=self.roles,
            values=self.values[rows],
        )

    def scale_column(self, col: int, factor: float) -> "DecisionMatrix":
        values = self.values.copy()
        values[:, col] *= factor
        return DecisionMatrix(self.names, self.labels, self.roles, values)

    def with_value(self, row: int, col: int, value: float) -> "DecisionMatrix":
        values = self.values.copy()
        values[row, col] = value
        return DecisionMatrix(self.names, self.labels, self.roles, values)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class Issue:
    code: str
    message: str
    row: int | None = None
    col: int | None = None

    def __str__(self) -> str:
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.col is not None:
            where.append(f"column {self.col}")
        loc = f" ({', '.join(where)})" if where else ""
        return f"{self.code}: {self.message}{loc}"


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Issue, ...] = ()
    warnings: tuple[Issue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {i.code for i in self.errors}

    def warning_codes(self) -> set[str]:
        return {i.code for i in self.warnings}


def _proportional(a: NDArray, b: NDArray, rtol: float) -> bool:
    # b == c * a for one c > 0, elementwise within rtol
    nz = np.abs(a) > 0
    if not nz.any() or np.any((np.abs(a) == 0) != (np.abs(b) == 0)):
        return False
    ratios = b[nz] / a[nz]
    c = ratios[0]
    if c <= 0:
        return False
    return bool(np.all(np.abs(ratios - c) <= rtol * abs(c)))


def validate(matrix: DecisionMatrix) -> ValidationReport:
    """Check the assumptions every method relies on.

    Errors: no alternatives/inputs/outputs, non-finite values, non-positive
    inputs, negative outputs, all-zero output rows, duplicate labels.
    A row that is a positive multiple of another row is only a warning.
    """
    errors: list[Issue] = []
    warnings: list[Issue] = []
    if matrix.n == 0:
        errors.append(Issue("no alternatives", "matrix has no alternatives"))
    if not matrix.input_columns:
        errors.append(Issue("no inputs", "at least one input attribute is required"))
    if not matrix.output_columns:
        errors.append(Issue("no outputs", "at least one output attribute is required"))

    seen: dict[str, int] = {}
    for j, name in enumerate(matrix.names):
        if name in seen:
            errors.append(Issue("duplicate label", f"alternative {name!r} repeats row {seen[name]}", row=j))
        else:
            seen[name] = j

    v = matrix.values
    for j, k in zip(*np.nonzero(~np.isfinite(v))):
        errors.append(Issue("non-finite value", f"value {v[j, k]!r}", row=int(j), col=int(k)))
    finite = np.where(np.isfinite(v), v, 1.0)
    for k in matrix.input_columns:
        for j in np.nonzero(finite[:, k] <= 0)[0]:
            errors.append(Issue("non-positive input", f"{matrix.labels[k]} = {v[j, k]}", row=int(j), col=k))
    for k in matrix.output_columns:
        for j in np.nonzero(finite[:, k] < 0)[0]:
            errors.append(Issue("negative output", f"{matrix.labels[k]} = {v[j, k]}", row=int(j), col=k))
    if matrix.output_columns:
        out = finite[:, matrix.output_columns]
        for j in np.nonzero(~(out > 0).any(axis=1))[0]:
            errors.append(Issue("all-zero output row", f"alternative {matrix.names[j]!r} produces nothing", row=int(j)))

    if np.isfinite(v).all():
        for a in range(matrix.n):
            for b in range(a + 1, matrix.n):
                if _proportional(v[a], v[b], PROPORTIONAL_RTOL):
                    warnings.append(Issue(
                        "proportional duplicate",
                        f"{matrix.names[b]!r} is a multiple of {matrix.names[a]!r}",
                        row=b,
                    ))
    return ValidationReport(tuple(errors), tuple(warnings))


def require_valid(matrix: DecisionMatrix) -> None:
    report = validate(matrix)
    if not report.ok:
        raise ValidationError(report)


@dataclass(frozen=True)
class NormalizedMatrix:
    """Column-max normalized copy of a decision matrix.

    ``column_max`` keeps the divisors so scores can be mapped back to raw units.
    """

    source: DecisionMatrix
    values: NDArray[np.float64]
    column_max: NDArray[np.float64] = field(repr=False)

    @property
    def names(self) -> tuple[str, ...]:
        return self.source.names

    @property
    def inputs(self) -> NDArray[np.float64]:
        return self.values[:, self.source.input_columns]

    @property
    def outputs(self) -> NDArray[np.float64]:
        return self.values[:, self.source.output_columns]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def as_matrix(self) -> DecisionMatrix:
        return DecisionMatrix(self.source.names, self.source.labels, self.source.roles, self.values)

    def denormalize(self, values: ArrayLike, columns: Sequence[int]) -> NDArray[np.float64]:
        """Map normalized values in the given columns back to raw units."""
        return np.asarray(values, dtype=float) * self.column_max[list(columns)]


def normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide every column by its maximum over all alternatives."""
    require_valid(matrix)
    col_max = matrix.values.max(axis=0)
    bad = np.nonzero(col_max <= 0)[0]
    if bad.size:
        raise DegenerateColumnError(
            "degenerate attribute column: " + ", ".join(matrix.labels[k] for k in bad)
        )
    return NormalizedMatrix(matrix, _frozen(matrix.values / col_max), _frozen(col_max))
