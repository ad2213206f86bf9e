"""Curriculum planning, training-corpus emission and difficulty calibration.

A plan replays the easy -> medium -> hard spectrum once per stage with
fresh seeds (seed = base_seed + global emission index). Tier counts come
from largest-remainder apportionment of the per-stage total over the
easy:medium:hard proportions (default 5:4:1), and instances round-robin
over the task set inside each tier.
"""
from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .canonical import canonical_json, sha256_hex
from .engine import all_tasks, generate, instance_to_record, render_prompt
from .ioutil import atomic_write_text
from .registry import task_def
from .reward import score
from .types import (Difficulty, Instance, TaskId, TRAINING_TIERS,
                    solution_to_json)

DEFAULT_STAGES = 3
DEFAULT_PER_STAGE = 5000
DEFAULT_PROPORTIONS = (5, 4, 1)

# calibration target success-rate bands per tier
TARGET_SUCCESS_BANDS: dict[Difficulty, Optional[tuple[float, float]]] = {
    Difficulty.EASY: (0.70, 0.90),
    Difficulty.MEDIUM: (0.40, 0.70),
    Difficulty.HARD: (0.10, 0.40),
    Difficulty.BENCHMARK: None,
}


def difficulty_profile(task: TaskId) -> dict[Difficulty, dict]:
    """Per-tier parameter rows plus the tier's target success band."""
    td = task_def(task)
    return {tier: {"params": dict(td.tiers[tier]),
                   "target_success_band": TARGET_SUCCESS_BANDS[tier]}
            for tier in Difficulty}


def apportion(total: int, proportions: Sequence[int]) -> tuple[int, ...]:
    """Largest-remainder split of ``total`` by ``proportions``."""
    if total < 0 or any(p <= 0 for p in proportions):
        raise ValueError("total must be >= 0 and proportions positive")
    denom = sum(proportions)
    floors = [total * p // denom for p in proportions]
    remainder = total - sum(floors)
    by_fraction = sorted(range(len(proportions)),
                         key=lambda i: (-(total * proportions[i] % denom), i))
    for i in by_fraction[:remainder]:
        floors[i] += 1
    return tuple(floors)


@dataclass(frozen=True)
class PlanRow:
    emission_index: int
    stage: int
    tier: Difficulty
    task: TaskId
    seed: int


@dataclass(frozen=True)
class CurriculumPlan:
    tasks: tuple[TaskId, ...]
    stages: int
    per_stage_total: int
    proportions: tuple[int, int, int]
    base_seed: int
    rows: tuple[PlanRow, ...]

    @property
    def tier_counts(self) -> tuple[int, ...]:
        return apportion(self.per_stage_total, self.proportions)


def plan_curriculum(tasks: Optional[Iterable[TaskId]] = None,
                    stages: int = DEFAULT_STAGES,
                    per_stage_total: int = DEFAULT_PER_STAGE,
                    proportions: tuple[int, int, int] = DEFAULT_PROPORTIONS,
                    base_seed: int = 0) -> CurriculumPlan:
    task_tuple = tuple(tasks) if tasks is not None else all_tasks()
    if not task_tuple:
        raise ValueError("task set must not be empty")
    if stages <= 0 or per_stage_total <= 0:
        raise ValueError("stages and per_stage_total must be positive")
    counts = apportion(per_stage_total, proportions)
    rows = []
    index = 0
    for stage in range(stages):
        for tier, count in zip(TRAINING_TIERS, counts):
            for j in range(count):
                rows.append(PlanRow(
                    emission_index=index,
                    stage=stage,
                    tier=tier,
                    task=task_tuple[j % len(task_tuple)],
                    seed=base_seed + index,
                ))
                index += 1
    return CurriculumPlan(task_tuple, stages, per_stage_total,
                          tuple(proportions), base_seed, tuple(rows))


@dataclass(frozen=True)
class CorpusManifest:
    rows: tuple[tuple[str, str, str, int, int], ...]  # id, task, tier, stage, seed
    digest: str

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "digest": self.digest}


def _generate_row(row: PlanRow) -> Instance:
    return generate(row.task, row.tier, row.seed)


def generate_plan_instances(plan: CurriculumPlan,
                            workers: int = 1) -> list[Instance]:
    """All plan instances in emission order; generation may parallelize."""
    if workers <= 1:
        return [_generate_row(row) for row in plan.rows]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_generate_row, plan.rows, chunksize=64))


def emit_corpus(plan: CurriculumPlan, corpus_path, sidecar_path=None,
                manifest_path=None, instances_path=None,
                workers: int = 1) -> CorpusManifest:
    """Write the training corpus (prompt view) plus the answer sidecar.

    The corpus holds {instance_id, prompt, task, tier, stage} records in
    emission order; planted solutions and heuristic objectives go only to
    the sidecar. ``instances_path`` optionally also writes the canonical
    instance records (the file cli_score consumes). Returns a manifest
    with the corpus file digest.
    """
    corpus_path = os.fspath(corpus_path)
    if sidecar_path is None:
        sidecar_path = corpus_path + ".answers"
    instances = generate_plan_instances(plan, workers=workers)
    corpus_lines = []
    sidecar_lines = []
    manifest_rows = []
    for row, inst in zip(plan.rows, instances):
        corpus_lines.append(canonical_json({
            "instance_id": inst.instance_id,
            "prompt": render_prompt(inst),
            "task": inst.task.value,
            "tier": inst.difficulty.value,
            "stage": row.stage,
        }))
        sidecar_lines.append(canonical_json({
            "instance_id": inst.instance_id,
            "planted": solution_to_json(inst.planted),
            "heuristic_objective": inst.heuristic_objective,
        }))
        manifest_rows.append((inst.instance_id, inst.task.value,
                              inst.difficulty.value, row.stage, row.seed))
    ids = [r[0] for r in manifest_rows]
    assert len(set(ids)) == len(ids), "duplicate instance ids in corpus"
    corpus_text = "".join(line + "\n" for line in corpus_lines)
    atomic_write_text(corpus_path, corpus_text)
    atomic_write_text(sidecar_path, "".join(l + "\n" for l in sidecar_lines))
    if instances_path is not None:
        from .engine import write_instances
        write_instances(instances_path, instances)
    manifest = CorpusManifest(tuple(manifest_rows), sha256_hex(corpus_text))
    if manifest_path is not None:
        atomic_write_text(manifest_path, canonical_json(manifest.to_json()) + "\n")
    return manifest


# --- empirical difficulty calibration (Stage IV shape) ---

@dataclass(frozen=True)
class CalibrationMeasurement:
    row: dict
    success_rate: float


@dataclass(frozen=True)
class CalibrationResult:
    chosen: dict
    success_rate: float
    in_band: bool
    measurements: tuple[CalibrationMeasurement, ...]


SolverCallback = Callable[[dict], str]
"""Maps an instance record (with a 'prompt' key) to a completion string.

Production callbacks should look only at record['prompt']; built-in
oracle callbacks (used in tests) may inspect the rest of the record.
"""


def calibrate(task: TaskId, tier: Difficulty, candidate_rows: Sequence[dict],
              solver_callback: SolverCallback, sample_size: int,
              base_seed: int = 0) -> CalibrationResult:
    """Measure SR per candidate row; pick the row inside the tier's band.

    Ties (several rows in band) go to the SR nearest the band midpoint.
    If no row lands in the band, the nearest row is returned flagged
    out-of-band.
    """
    if not candidate_rows:
        raise ValueError("candidate_rows must not be empty")
    band = TARGET_SUCCESS_BANDS[tier]
    if band is None:
        raise ValueError(f"tier {tier.value} has no target success band")
    measurements = []
    seed = base_seed
    for row in candidate_rows:
        successes = 0
        for _ in range(sample_size):
            inst = generate(task, tier, seed, row=row)
            seed += 1
            record = instance_to_record(inst)
            record["prompt"] = render_prompt(inst)
            completion = solver_callback(record)
            result = score(inst, completion)
            if result.verify is not None and result.verify.feasible:
                successes += 1
        measurements.append(CalibrationMeasurement(dict(row),
                                                   successes / sample_size))
    lo, hi = band
    mid = (lo + hi) / 2
    in_band = [m for m in measurements if lo <= m.success_rate <= hi]
    pool = in_band if in_band else measurements
    chosen = min(pool, key=lambda m: (abs(m.success_rate - mid),
                                      measurements.index(m)))
    return CalibrationResult(chosen.row, chosen.success_rate,
                             bool(in_band), tuple(measurements))
