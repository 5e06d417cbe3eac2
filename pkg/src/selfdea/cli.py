"""Command-line front-end.

Usage::

    selfdea run --demo table3.2 --method sadea
    selfdea run --input data.csv --method topsis --weights 0.5,0.25,0.25 --format json
    selfdea run --demo table3.1 --method ccr --rts irs
    selfdea validate --input data.csv
    selfdea datasets

Input CSV layout: first row holds attribute labels (first cell names the
alternative column), second row holds role tags (input/cost or
output/benefit), every further row is ``name,value,value,...``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from ._workers import map_dmus
from .classic import ReturnsToScale, SolverError, ccr_efficiency, rank_results, saati_nonradial, super_efficiency
from .madm import maxmin_full_ranking, topsis
from .model import DecisionMatrix, Role, ValidationError, validate
from .ranking import TIE_TOL, Ranking
from .sadea import Membership, sadea_rank

log = logging.getLogger("selfdea")

METHODS = ("sadea", "topsis", "maxmin", "ccr", "super", "nonradial")
RTS_METHODS = ("ccr", "super")
FORMATS = ("table", "json", "csv")
DEMOS = {
    "table3.1": "table3_1.csv",
    "table3.2": "table3_2.csv",
    "table3.4": "table3_4.csv",
}

EXIT_OK = 0
EXIT_SOLVE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class CsvFormatError(ValueError):
    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        self.row, self.col = row, col
        where = ""
        if row is not None:
            where = f" at row {row}" + (f", column {col}" if col is not None else "")
        super().__init__(message + where)


class ConfigError(ValueError):
    pass


def parse_csv(text: str, source: str = "<string>") -> DecisionMatrix:
    """Parse the two-header CSV layout. Row/column positions in errors are 1-based."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in r)]
    if not rows:
        raise CsvFormatError(f"{source}: empty file")
    header = [c.strip() for c in rows[0]]
    if len(header) < 2:
        raise CsvFormatError(f"{source}: header needs a name column and at least one attribute", 1)
    if len(rows) < 2:
        raise CsvFormatError(f"{source}: missing role row", 2)
    role_row = rows[1]
    if len(role_row) != len(header):
        raise CsvFormatError(f"{source}: role row has {len(role_row)} cells, header has {len(header)}", 2)
    roles = []
    for k, tag in enumerate(role_row[1:], start=2):
        try:
            roles.append(Role.parse(tag))
        except ValueError:
            raise CsvFormatError(f"{source}: unknown role tag {tag.strip()!r}", 2, k) from None
    data = rows[2:]
    if not data:
        raise CsvFormatError(f"{source}: no alternatives")
    names, values = [], []
    for i, row in enumerate(data, start=3):
        if len(row) != len(header):
            raise CsvFormatError(f"{source}: expected {len(header)} cells, found {len(row)}", i)
        names.append(row[0].strip())
        vals = []
        for k, cell in enumerate(row[1:], start=2):
            try:
                vals.append(float(cell))
            except ValueError:
                raise CsvFormatError(f"{source}: non-numeric cell {cell.strip()!r}", i, k) from None
        values.append(vals)
    return DecisionMatrix(tuple(names), tuple(header[1:]), tuple(roles), values)


def ingest_csv(path: str | Path, check: bool = True) -> DecisionMatrix:
    """Read a decision matrix from ``path``; raise ValidationError on invalid data."""
    path = Path(path)
    matrix = parse_csv(path.read_text(encoding="utf-8-sig"), str(path))
    if check:
        report = validate(matrix)
        for w in report.warnings:
            log.warning("%s", w)
        if not report.ok:
            raise ValidationError(report)
    return matrix


def demo_text(name: str) -> str:
    if name not in DEMOS:
        raise ConfigError(f"unknown demo dataset {name!r}; choose from {', '.join(DEMOS)}")
    return resources.files("selfdea").joinpath("data", DEMOS[name]).read_text(encoding="utf-8")


def load_demo(name: str) -> DecisionMatrix:
    return parse_csv(demo_text(name), name)


@dataclass
class RunConfig:
    method: str
    demo: str | None = None
    input_path: str | None = None
    rts: str | None = None
    weights: list[float] | None = None
    output_format: str = "table"
    jobs: int = 1
    membership: str = "corrected"
    exclude_self: bool = False
    tie_tol: float = TIE_TOL

    def check(self) -> None:
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}")
        if (self.demo is None) == (self.input_path is None):
            raise ConfigError("give exactly one of --demo or --input")
        if self.weights is not None and self.method != "topsis":
            raise ConfigError("--weights is only accepted with --method topsis")
        if self.rts is not None and self.method not in RTS_METHODS:
            raise ConfigError(f"--rts is only accepted with --method {' or '.join(RTS_METHODS)}")
        if self.rts is not None and self.rts not in ("crs", "irs"):
            raise ConfigError(f"unknown returns to scale {self.rts!r}")
        if self.exclude_self and self.method != "nonradial":
            raise ConfigError("--exclude-self is only accepted with --method nonradial")
        if self.membership != "corrected" and self.method != "sadea":
            raise ConfigError("--membership is only accepted with --method sadea")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}")
        if self.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        if not self.tie_tol >= 0:
            raise ConfigError("--tie-tol must be nonnegative")


@dataclass
class RunOutcome:
    ranking: Ranking
    params: dict[str, Any] = field(default_factory=dict)
    trace: list[dict[str, Any]] | None = None
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out = self.ranking.to_dict()
        out["params"] = self.params
        if self.trace is not None:
            out["trace"] = self.trace
        if self.failures:
            out["failures"] = self.failures
        return out


def run(config: RunConfig, matrix: DecisionMatrix | None = None) -> RunOutcome:
    config.check()
    if matrix is None:
        matrix = load_demo(config.demo) if config.demo else ingest_csv(config.input_path)
    report = validate(matrix)
    if not report.ok:
        raise ValidationError(report)
    params: dict[str, Any] = {"dataset": config.demo or str(config.input_path)}
    method = config.method

    if method == "sadea":
        params["membership"] = config.membership
        ranking = sadea_rank(matrix, Membership(config.membership), config.jobs, config.tie_tol)
        return RunOutcome(ranking, params)
    if method == "topsis":
        result = topsis(matrix, config.weights)
        params["weights"] = list(config.weights) if config.weights else [1.0 / len(matrix.labels)] * len(matrix.labels)
        return RunOutcome(result.ranking(config.tie_tol), params)
    if method == "maxmin":
        trace = maxmin_full_ranking(matrix, config.tie_tol)
        return RunOutcome(trace.ranking, params, trace=trace.to_dict(matrix.names))

    if method in RTS_METHODS:
        rts = ReturnsToScale(config.rts or "crs")
        params["rts"] = rts.value
        func = ccr_efficiency if method == "ccr" else super_efficiency
        results = map_dmus(func, matrix, range(matrix.n), config.jobs, rts=rts)
    else:
        params["exclude_self"] = config.exclude_self
        results = map_dmus(saati_nonradial, matrix, range(matrix.n), config.jobs, exclude_self=config.exclude_self)
    failures = [f"{matrix.names[r.dmu]}: {r.status.value}" for r in results if not r.feasible]
    return RunOutcome(rank_results(matrix, results, method), params, failures=failures)


def _fmt(score: float | None) -> str:
    if score is None or not math.isfinite(score):
        return "inf"
    return f"{score:.7f}"


def render(outcome: RunOutcome, fmt: str) -> str:
    entries = outcome.ranking.entries
    if fmt == "json":
        return json.dumps(outcome.to_dict(), indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["rank", "name", "score"])
        for e in entries:
            writer.writerow([e.rank, e.name, "" if e.score is None else repr(float(e.score))])
        return buf.getvalue().rstrip("\n")
    width = max([len("Alternative")] + [len(e.name) for e in entries])
    rank_w = max([len("Rank")] + [len(e.rank) for e in entries])
    better = "lower" if outcome.ranking.direction.value == "lowerBetter" else "higher"
    lines = [
        f"method: {outcome.ranking.method} ({better} score is better)",
        f"{'Rank':<{rank_w}}  {'Alternative':<{width}}  Score",
    ]
    for e in entries:
        lines.append(f"{e.rank:<{rank_w}}  {e.name:<{width}}  {_fmt(e.score)}")
    for f in outcome.failures:
        lines.append(f"warning: {f}")
    return "\n".join(lines)


def _weights(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid weights {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdea", description="Rank alternatives with DEA, SADEA, Max-min and TOPSIS.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--demo", choices=sorted(DEMOS), help="embedded dataset")
        src.add_argument("--input", dest="input_path", help="decision matrix CSV")

    p_run = sub.add_parser("run", help="score and rank alternatives")
    add_source(p_run)
    p_run.add_argument("--method", required=True, choices=METHODS)
    p_run.add_argument("--rts", choices=("crs", "irs"), help="returns to scale (ccr, super)")
    p_run.add_argument("--weights", type=_weights, help="comma-separated attribute weights (topsis)")
    p_run.add_argument("--format", dest="output_format", default="table", choices=FORMATS)
    p_run.add_argument("--jobs", type=int, default=1, help="worker processes for per-DMU programs")
    p_run.add_argument("--membership", default="corrected", choices=("corrected", "literal"),
                       help="input membership direction (sadea)")
    p_run.add_argument("--exclude-self", action="store_true", help="drop the evaluated DMU (nonradial)")
    p_run.add_argument("--tie-tol", type=float, default=TIE_TOL, help="relative tolerance for tied scores")

    p_val = sub.add_parser("validate", help="check a decision matrix")
    add_source(p_val)

    sub.add_parser("datasets", help="list embedded datasets")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")

    if args.command == "datasets":
        for name in DEMOS:
            m = load_demo(name)
            print(f"{name}: {m.n} alternatives, {len(m.input_columns)} inputs, {len(m.output_columns)} outputs")
        return EXIT_OK

    try:
        if args.command == "validate":
            matrix = load_demo(args.demo) if args.demo else ingest_csv(args.input_path, check=False)
            report = validate(matrix)
            for issue in report.errors:
                print(f"error: {issue}")
            for issue in report.warnings:
                print(f"warning: {issue}")
            if report.ok:
                print(f"ok: {matrix.n} alternatives, {len(matrix.labels)} attributes")
            return EXIT_OK if report.ok else EXIT_INPUT

        config = RunConfig(
            method=args.method,
            demo=args.demo,
            input_path=args.input_path,
            rts=args.rts,
            weights=args.weights,
            output_format=args.output_format,
            jobs=args.jobs,
            membership=args.membership,
            exclude_self=args.exclude_self,
            tie_tol=args.tie_tol,
        )
        outcome = run(config)
    except ConfigError as exc:
        print(f"selfdea: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CsvFormatError, ValidationError, OSError) as exc:
        print(f"selfdea: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"selfdea: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"selfdea: {exc}", file=sys.stderr)
        return EXIT_SOLVE

    print(render(outcome, config.output_format))
    return EXIT_SOLVE if outcome.failures else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
