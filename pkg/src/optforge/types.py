"""Shared instance model: task ids, difficulty tiers, solutions, verdicts.

All objective values are exact integers; verification never touches
floating point. Every type here is immutable, so instances and verdicts
can be shared freely across threads.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

GENERATOR_VERSION = "optforge-0.1.0"


class Category(str, enum.Enum):
    PLANNING = "planning"
    GRAPH = "graph"
    PARTITION = "partition"
    SELECTION = "selection"
    SCHEDULE = "schedule"


class Sense(str, enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


class TaskId(str, enum.Enum):
    TSP = "tsp"
    HAMILTONIAN_CYCLE = "hamiltonian_cycle"
    MAX_CLIQUE = "max_clique"
    MAX_INDEPENDENT_SET = "max_independent_set"
    GRAPH_COLORING = "graph_coloring"
    BALANCED_BISECTION = "balanced_bisection"
    SET_COVER = "set_cover"
    SUBSET_SUM = "subset_sum"
    KNAPSACK = "knapsack"
    MEETING_SCHEDULING = "meeting_scheduling"

    @property
    def category(self) -> Category:
        return _CATEGORY[self]

    @property
    def sense(self) -> Sense:
        return _SENSE[self]


_CATEGORY = {
    TaskId.TSP: Category.PLANNING,
    TaskId.HAMILTONIAN_CYCLE: Category.PLANNING,
    TaskId.MAX_CLIQUE: Category.GRAPH,
    TaskId.MAX_INDEPENDENT_SET: Category.GRAPH,
    TaskId.GRAPH_COLORING: Category.GRAPH,
    TaskId.BALANCED_BISECTION: Category.PARTITION,
    TaskId.SET_COVER: Category.SELECTION,
    TaskId.SUBSET_SUM: Category.SELECTION,
    TaskId.KNAPSACK: Category.SELECTION,
    TaskId.MEETING_SCHEDULING: Category.SCHEDULE,
}

# Bisection minimizes cut weight even though the task sits with the
# "maximize" family in some summaries; quality ratios use this sense.
_SENSE = {
    TaskId.TSP: Sense.MINIMIZE,
    TaskId.GRAPH_COLORING: Sense.MINIMIZE,
    TaskId.SET_COVER: Sense.MINIMIZE,
    TaskId.BALANCED_BISECTION: Sense.MINIMIZE,
    TaskId.HAMILTONIAN_CYCLE: Sense.MAXIMIZE,
    TaskId.MAX_CLIQUE: Sense.MAXIMIZE,
    TaskId.MAX_INDEPENDENT_SET: Sense.MAXIMIZE,
    TaskId.SUBSET_SUM: Sense.MAXIMIZE,
    TaskId.KNAPSACK: Sense.MAXIMIZE,
    TaskId.MEETING_SCHEDULING: Sense.MAXIMIZE,
}


class Difficulty(str, enum.Enum):
    EASY = "easy"
    MEDIUM = "medium"
    HARD = "hard"
    BENCHMARK = "benchmark"

    @property
    def rank(self) -> int:
        return _DIFFICULTY_ORDER[self]

    def __lt__(self, other):
        if isinstance(other, Difficulty):
            return self.rank < other.rank
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Difficulty):
            return self.rank <= other.rank
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Difficulty):
            return self.rank > other.rank
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Difficulty):
            return self.rank >= other.rank
        return NotImplemented


_DIFFICULTY_ORDER = {
    Difficulty.EASY: 0,
    Difficulty.MEDIUM: 1,
    Difficulty.HARD: 2,
    Difficulty.BENCHMARK: 3,
}

TRAINING_TIERS = (Difficulty.EASY, Difficulty.MEDIUM, Difficulty.HARD)


# --- Solution variants (tagged union) ---

@dataclass(frozen=True)
class IndexList:
    """Ordered ids: items, vertices, or subset indices."""
    ids: tuple[int, ...]


@dataclass(frozen=True)
class Route:
    """City/vertex sequence; closed when first == last."""
    cities: tuple[int, ...]


@dataclass(frozen=True)
class PartitionPair:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class ColorVector:
    """colors[i] is the (positive) color of vertex i."""
    colors: tuple[int, ...]


@dataclass(frozen=True)
class Schedule:
    """(meeting_id, room_id, start_time) triples, ascending by start."""
    entries: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Impossible:
    """Set-cover-only sentinel for 'no cover exists'."""


Solution = Union[IndexList, Route, PartitionPair, ColorVector, Schedule, Impossible]

_SOLUTION_KINDS = {
    IndexList: "index_list",
    Route: "route",
    PartitionPair: "partition",
    ColorVector: "colors",
    Schedule: "schedule",
    Impossible: "impossible",
}


def solution_to_json(sol: Solution) -> dict:
    kind = _SOLUTION_KINDS[type(sol)]
    if isinstance(sol, IndexList):
        return {"kind": kind, "ids": list(sol.ids)}
    if isinstance(sol, Route):
        return {"kind": kind, "cities": list(sol.cities)}
    if isinstance(sol, PartitionPair):
        return {"kind": kind, "a": list(sol.side_a), "b": list(sol.side_b)}
    if isinstance(sol, ColorVector):
        return {"kind": kind, "colors": list(sol.colors)}
    if isinstance(sol, Schedule):
        return {"kind": kind, "entries": [list(e) for e in sol.entries]}
    return {"kind": kind}


def solution_from_json(obj: dict) -> Solution:
    kind = obj["kind"]
    if kind == "index_list":
        return IndexList(tuple(int(x) for x in obj["ids"]))
    if kind == "route":
        return Route(tuple(int(x) for x in obj["cities"]))
    if kind == "partition":
        return PartitionPair(tuple(int(x) for x in obj["a"]),
                             tuple(int(x) for x in obj["b"]))
    if kind == "colors":
        return ColorVector(tuple(int(x) for x in obj["colors"]))
    if kind == "schedule":
        entries = tuple((int(m), int(r), int(s)) for m, r, s in obj["entries"])
        return Schedule(entries)
    if kind == "impossible":
        return Impossible()
    raise ValueError(f"unknown solution kind {kind!r}")


# --- Verification ---

Violation = tuple[str, str]  # (code, human detail)


@dataclass(frozen=True)
class VerifyResult:
    feasible: bool
    violations: tuple[Violation, ...]
    objective: Optional[int]

    def __post_init__(self):
        # feasible <=> violations empty <=> objective present
        assert self.feasible == (not self.violations) == (self.objective is not None)


def feasible(objective: int) -> VerifyResult:
    return VerifyResult(True, (), int(objective))


def infeasible(violations: list[Violation]) -> VerifyResult:
    assert violations
    return VerifyResult(False, tuple(violations), None)


class WrongAnswerShapeError(ValueError):
    """Candidate solution variant does not match the task's answer grammar."""


@dataclass(frozen=True)
class Instance:
    instance_id: str
    task: TaskId
    difficulty: Difficulty
    seed: int
    payload: object
    planted: Solution
    heuristic_objective: int
    generator_version: str
