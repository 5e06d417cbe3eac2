"""Rank alternatives with self-assessment fuzzy DEA, classic DEA, Max-min and TOPSIS."""

__version__ = "0.1.0"

from .classic import (
    DeaModel,
    EfficiencyResult,
    ReturnsToScale,
    ccr_efficiency,
    saati_nonradial,
    super_efficiency,
)
from .cli import ingest_csv, load_demo
from .lp import LinearProgram, LpSolution, Status, solve
from .madm import MaxminTrace, TopsisResult, maxmin_full_ranking, maxmin_scores, topsis
from .model import DecisionMatrix, NormalizedMatrix, Role, ValidationReport, normalize, validate
from .ranking import Direction, Ranking
from .sadea import (
    Membership,
    MembershipFunction,
    SadeaResult,
    input_membership,
    output_membership,
    sadea_rank,
    sadea_score,
    sadea_scores,
)

__all__ = [
    "DecisionMatrix", "NormalizedMatrix", "Role", "ValidationReport", "normalize", "validate",
    "LinearProgram", "LpSolution", "Status", "solve",
    "ReturnsToScale", "DeaModel", "EfficiencyResult", "ccr_efficiency", "super_efficiency", "saati_nonradial",
    "Membership", "MembershipFunction", "SadeaResult", "input_membership", "output_membership",
    "sadea_score", "sadea_scores", "sadea_rank",
    "MaxminTrace", "TopsisResult", "maxmin_scores", "maxmin_full_ranking", "topsis",
    "Direction", "Ranking",
    "ingest_csv", "load_demo",
]
