"""Uniform generate/verify/solve dispatch: one TaskDef per task."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .rng import SplitMix64
from .types import (ColorVector, Difficulty, Impossible, IndexList,
                    PartitionPair, Route, Schedule, Solution, TaskId,
                    VerifyResult)
from .tasks import graphs, partition, planning, scheduling, selection


@dataclass(frozen=True)
class TaskDef:
    task: TaskId
    tiers: Mapping[Difficulty, dict]
    generate: Callable[[dict, SplitMix64], tuple[Any, Solution]]
    verify: Callable[[Any, Solution], VerifyResult]
    solve: Callable[[Any, Solution, SplitMix64], tuple[Solution, int]]
    payload_to_json: Callable[[Any], dict]
    payload_from_json: Callable[[dict], Any]
    prompt: Callable[[Any], str]
    answer_kind: str                  # grammar key, see answers.py
    answer_types: tuple[type, ...]    # accepted Solution variants
    answer_hint: str                  # one-line format instruction


REGISTRY: dict[TaskId, TaskDef] = {}


def _register(td: TaskDef) -> None:
    REGISTRY[td.task] = td


_register(TaskDef(
    task=TaskId.SUBSET_SUM,
    tiers=selection.SUBSET_SUM_TIERS,
    generate=selection.gen_subset_sum,
    verify=selection.verify_subset_sum,
    solve=selection.solve_subset_sum,
    payload_to_json=selection.subset_sum_payload_to_json,
    payload_from_json=selection.subset_sum_payload_from_json,
    prompt=selection.subset_sum_prompt,
    answer_kind="index_list",
    answer_types=(IndexList,),
    answer_hint="a list of ids like [0, 1, 4]",
))

_register(TaskDef(
    task=TaskId.SET_COVER,
    tiers=selection.SET_COVER_TIERS,
    generate=selection.gen_set_cover,
    verify=selection.verify_set_cover,
    solve=selection.solve_set_cover,
    payload_to_json=selection.set_cover_payload_to_json,
    payload_from_json=selection.set_cover_payload_from_json,
    prompt=selection.set_cover_prompt,
    answer_kind="set_cover_answer",
    answer_types=(IndexList, Impossible),
    answer_hint='a list of subset ids like [0, 3, 4], or Impossible',
))

_register(TaskDef(
    task=TaskId.KNAPSACK,
    tiers=selection.KNAPSACK_TIERS,
    generate=selection.gen_knapsack,
    verify=selection.verify_knapsack,
    solve=selection.solve_knapsack,
    payload_to_json=selection.knapsack_payload_to_json,
    payload_from_json=selection.knapsack_payload_from_json,
    prompt=selection.knapsack_prompt,
    answer_kind="index_list",
    answer_types=(IndexList,),
    answer_hint="a list of item ids like [0, 2, 3]",
))

_register(TaskDef(
    task=TaskId.MAX_CLIQUE,
    tiers=graphs.CLIQUE_TIERS,
    generate=graphs.gen_clique,
    verify=graphs.verify_clique,
    solve=graphs.solve_clique,
    payload_to_json=graphs.graph_to_json,
    payload_from_json=graphs.graph_from_json,
    prompt=graphs.clique_prompt,
    answer_kind="index_list",
    answer_types=(IndexList,),
    answer_hint="a list of vertex ids like [0, 1, 3, 4]",
))

_register(TaskDef(
    task=TaskId.MAX_INDEPENDENT_SET,
    tiers=graphs.MIS_TIERS,
    generate=graphs.gen_mis,
    verify=graphs.verify_mis,
    solve=graphs.solve_mis,
    payload_to_json=graphs.graph_to_json,
    payload_from_json=graphs.graph_from_json,
    prompt=graphs.mis_prompt,
    answer_kind="index_list",
    answer_types=(IndexList,),
    answer_hint="a list of vertex ids like [0, 3]",
))

_register(TaskDef(
    task=TaskId.GRAPH_COLORING,
    tiers=graphs.COLORING_TIERS,
    generate=graphs.gen_coloring,
    verify=graphs.verify_coloring,
    solve=graphs.solve_coloring,
    payload_to_json=graphs.graph_to_json,
    payload_from_json=graphs.graph_from_json,
    prompt=graphs.coloring_prompt,
    answer_kind="colors",
    answer_types=(ColorVector,),
    answer_hint="a positional list where entry i is the color of vertex i, "
                "like [1, 2, 1, 2]",
))

_register(TaskDef(
    task=TaskId.TSP,
    tiers=planning.TSP_TIERS,
    generate=planning.gen_tsp,
    verify=planning.verify_tsp,
    solve=planning.solve_tsp,
    payload_to_json=planning.tsp_payload_to_json,
    payload_from_json=planning.tsp_payload_from_json,
    prompt=planning.tsp_prompt,
    answer_kind="route",
    answer_types=(Route,),
    answer_hint="the tour as a closed list of cities like [0, 1, 3, 2, 0]",
))

_register(TaskDef(
    task=TaskId.HAMILTONIAN_CYCLE,
    tiers=planning.HAMILTONIAN_TIERS,
    generate=planning.gen_hamiltonian,
    verify=planning.verify_hamiltonian,
    solve=planning.solve_hamiltonian,
    payload_to_json=planning.hamiltonian_payload_to_json,
    payload_from_json=planning.hamiltonian_payload_from_json,
    prompt=planning.hamiltonian_prompt,
    answer_kind="route",
    answer_types=(Route,),
    answer_hint="the cycle as a list of vertices like [0, 4, 2, 7] "
                "(optionally repeating the first vertex at the end)",
))

_register(TaskDef(
    task=TaskId.BALANCED_BISECTION,
    tiers=partition.BISECTION_TIERS,
    generate=partition.gen_bisection,
    verify=partition.verify_bisection,
    solve=partition.solve_bisection,
    payload_to_json=partition.bisection_payload_to_json,
    payload_from_json=partition.bisection_payload_from_json,
    prompt=partition.bisection_prompt,
    answer_kind="partition",
    answer_types=(PartitionPair,),
    answer_hint="two nested lists like [[0, 1, 2], [3, 4, 5]]",
))

_register(TaskDef(
    task=TaskId.MEETING_SCHEDULING,
    tiers=scheduling.MSP_TIERS,
    generate=scheduling.gen_msp,
    verify=scheduling.verify_msp,
    solve=scheduling.solve_msp,
    payload_to_json=scheduling.msp_payload_to_json,
    payload_from_json=scheduling.msp_payload_from_json,
    prompt=scheduling.msp_prompt,
    answer_kind="schedule",
    answer_types=(Schedule,),
    answer_hint="a list of (meeting_id, room_id, start_time) triples "
                "sorted by start time, like [(0, 0, 900), (1, 1, 1000)]",
))

assert len(REGISTRY) == len(TaskId)


def task_def(task: TaskId) -> TaskDef:
    return REGISTRY[task]
