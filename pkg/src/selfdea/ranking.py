"""Ordered rankings with tie groups rendered as hyphenated rank ranges."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Sequence

TIE_TOL = 1e-9


class Direction(enum.Enum):
    LOWER_BETTER = "lowerBetter"
    HIGHER_BETTER = "higherBetter"


def rank_label(start: int, size: int) -> str:
    """``rank_label(16, 3) == "16-17-18"``; a singleton is just the number."""
    return "-".join(str(start + k) for k in range(size))


@dataclass(frozen=True)
class RankEntry:
    index: int
    name: str
    score: float | None
    rank: str
    position: int

    def to_dict(self) -> dict[str, Any]:
        score = self.score
        if score is not None and not math.isfinite(score):
            score = None
        return {"name": self.name, "score": score, "rank": self.rank}


@dataclass(frozen=True)
class Ranking:
    method: str
    direction: Direction
    entries: tuple[RankEntry, ...]

    @property
    def order(self) -> list[str]:
        return [e.name for e in self.entries]

    @property
    def groups(self) -> list[list[str]]:
        out: list[list[str]] = []
        last = None
        for e in self.entries:
            if e.position != last:
                out.append([])
                last = e.position
            out[-1].append(e.name)
        return out

    def rank_of(self, name: str) -> str:
        for e in self.entries:
            if e.name == name:
                return e.rank
        raise KeyError(name)

    def position_of(self, name: str) -> int:
        for e in self.entries:
            if e.name == name:
                return e.position
        raise KeyError(name)

    def scores(self) -> dict[str, float | None]:
        return {e.name: e.score for e in self.entries}

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "direction": self.direction.value,
            "entries": [e.to_dict() for e in self.entries],
        }


def _from_groups(method: str, direction: Direction, names, scores, groups) -> Ranking:
    entries = []
    start = 1
    for group in groups:
        label = rank_label(start, len(group))
        for j in group:
            entries.append(RankEntry(j, names[j], scores[j], label, start))
        start += len(group)
    return Ranking(method, direction, tuple(entries))


def rank_scores(
    names: Sequence[str],
    scores: Sequence[float | None],
    direction: Direction,
    method: str,
    tie_tol: float = TIE_TOL,
) -> Ranking:
    """Rank by score. ``None`` scores mean "unbounded" and rank best.

    Scores within ``tie_tol`` (relative to the first score of a group) share
    a rank range. Equal scores keep input order.
    """
    best = -math.inf if direction is Direction.LOWER_BETTER else math.inf
    keyed = [best if s is None else float(s) for s in scores]
    sign = 1.0 if direction is Direction.LOWER_BETTER else -1.0
    order = sorted(range(len(keyed)), key=lambda j: (sign * keyed[j], j))
    groups: list[list[int]] = []
    for j in order:
        if groups:
            head = keyed[groups[-1][0]]
            v = keyed[j]
            same = head == v or (
                math.isfinite(head) and math.isfinite(v) and abs(v - head) <= tie_tol * max(1.0, abs(head))
            )
            if same:
                groups[-1].append(j)
                continue
        groups.append([j])
    return _from_groups(method, direction, list(names), list(scores), [sorted(g) for g in groups])


def rank_sequence(
    names: Sequence[str],
    scores: Sequence[float | None],
    groups: Sequence[Sequence[int]],
    direction: Direction,
    method: str,
) -> Ranking:
    """Build a ranking whose order is fixed by the caller (e.g. elimination order)."""
    flat = [j for g in groups for j in g]
    if sorted(flat) != list(range(len(names))):
        raise ValueError("groups must cover every alternative exactly once")
    return _from_groups(method, direction, list(names), list(scores), [list(g) for g in groups])
