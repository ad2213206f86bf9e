"""Top-level generate/verify/solve API and the canonical instance codec.

generate() is a pure function of (task, difficulty, seed): the generator
and solver streams are derived from those values, so the same inputs
always reproduce byte-identical serialized instances for a given
generator version.
"""
from __future__ import annotations

import json
from typing import Iterable, Optional

from .canonical import canonical_json, sha256_hex
from .registry import REGISTRY, task_def
from .rng import SplitMix64
from .types import (GENERATOR_VERSION, Difficulty, Instance, Solution, TaskId,
                    VerifyResult, WrongAnswerShapeError, solution_from_json,
                    solution_to_json)

_RETRY_LIMIT = 10  # zero heuristic objectives are pathological; see ledger


def generate(task: TaskId, difficulty: Difficulty, seed: int,
             row: Optional[dict] = None) -> Instance:
    """Generate one instance; ``row`` overrides the tier parameter row."""
    td = task_def(task)
    params = td.tiers[difficulty] if row is None else row
    for attempt in range(_RETRY_LIMIT):
        gen_parts = [task.value, difficulty.value, seed, "generate"]
        if attempt:
            gen_parts.append(attempt)
        payload, planted = td.generate(params, SplitMix64.from_parts(*gen_parts))
        _, objective = td.solve(payload, planted, _solve_rng(task, difficulty, seed))
        if objective > 0:
            break
    else:
        raise RuntimeError(f"no positive baseline objective for "
                           f"{task.value}/{difficulty.value}/seed {seed}")
    body = _record_body(task, difficulty, seed, td.payload_to_json(payload),
                        solution_to_json(planted), objective)
    return Instance(
        instance_id=sha256_hex(canonical_json(body)),
        task=task,
        difficulty=difficulty,
        seed=seed,
        payload=payload,
        planted=planted,
        heuristic_objective=objective,
        generator_version=GENERATOR_VERSION,
    )


def _solve_rng(task: TaskId, difficulty: Difficulty, seed: int) -> SplitMix64:
    return SplitMix64.from_parts(task.value, difficulty.value, seed, "solve")


def build_instance(task: TaskId, difficulty: Difficulty, seed: int,
                   payload, planted: Solution) -> Instance:
    """Wrap an externally supplied payload as a full instance.

    Runs the task's baseline solver for the heuristic objective and
    computes the content digest; the planted solution must verify
    feasible. Intended for hand-built fixtures, not generation.
    """
    td = task_def(task)
    verdict = td.verify(payload, planted)
    if not verdict.feasible:
        raise ValueError(f"planted solution infeasible: {verdict.violations}")
    _, objective = td.solve(payload, planted, _solve_rng(task, difficulty, seed))
    body = _record_body(task, difficulty, seed, td.payload_to_json(payload),
                        solution_to_json(planted), objective)
    return Instance(
        instance_id=sha256_hex(canonical_json(body)),
        task=task,
        difficulty=difficulty,
        seed=seed,
        payload=payload,
        planted=planted,
        heuristic_objective=objective,
        generator_version=GENERATOR_VERSION,
    )


def verify(instance: Instance, candidate: Solution) -> VerifyResult:
    td = task_def(instance.task)
    if not isinstance(candidate, td.answer_types):
        raise WrongAnswerShapeError(
            f"wrong answer shape for task {instance.task.value}: "
            f"{type(candidate).__name__}")
    return td.verify(instance.payload, candidate)


def heuristic_solve(instance: Instance) -> tuple[Solution, int]:
    """Deterministic baseline solution; objective matches the stored M_h."""
    td = task_def(instance.task)
    rng = _solve_rng(instance.task, instance.difficulty, instance.seed)
    return td.solve(instance.payload, instance.planted, rng)


# --- canonical line format ---

def _record_body(task: TaskId, difficulty: Difficulty, seed: int,
                 payload_json: dict, planted_json: dict,
                 heuristic_objective: int) -> dict:
    return {
        "task": task.value,
        "difficulty": difficulty.value,
        "seed": seed,
        "payload": payload_json,
        "planted": planted_json,
        "heuristic_objective": heuristic_objective,
        "generator_version": GENERATOR_VERSION,
    }


def instance_to_record(instance: Instance) -> dict:
    td = task_def(instance.task)
    record = {"instance_id": instance.instance_id}
    record.update(_record_body(
        instance.task, instance.difficulty, instance.seed,
        td.payload_to_json(instance.payload),
        solution_to_json(instance.planted),
        instance.heuristic_objective))
    return record


def encode_instance(instance: Instance) -> str:
    return canonical_json(instance_to_record(instance))


def record_to_instance(record: dict, check_id: bool = True) -> Instance:
    task = TaskId(record["task"])
    difficulty = Difficulty(record["difficulty"])
    td = task_def(task)
    payload = td.payload_from_json(record["payload"])
    planted = solution_from_json(record["planted"])
    body = _record_body(task, difficulty, int(record["seed"]),
                        td.payload_to_json(payload),
                        solution_to_json(planted),
                        int(record["heuristic_objective"]))
    body["generator_version"] = record["generator_version"]
    digest = sha256_hex(canonical_json(body))
    if check_id and digest != record["instance_id"]:
        raise ValueError(f"instance_id mismatch for {record['instance_id']}")
    return Instance(
        instance_id=record["instance_id"],
        task=task,
        difficulty=difficulty,
        seed=int(record["seed"]),
        payload=payload,
        planted=planted,
        heuristic_objective=int(record["heuristic_objective"]),
        generator_version=record["generator_version"],
    )


def decode_instance(line: str, check_id: bool = True) -> Instance:
    return record_to_instance(json.loads(line), check_id=check_id)


def write_instances(path, instances: Iterable[Instance]) -> str:
    """Write canonical lines; returns the file's SHA-256 digest."""
    from .ioutil import atomic_write_text
    text = "".join(encode_instance(inst) + "\n" for inst in instances)
    atomic_write_text(path, text)
    return sha256_hex(text)


def read_instances(path, check_id: bool = True) -> list[Instance]:
    instances = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                instances.append(decode_instance(line, check_id=check_id))
            except Exception as exc:
                raise ValueError(f"{path}:{lineno}: bad instance record: {exc}") \
                    from exc
    return instances


# --- prompt view (training-facing; never contains planted/heuristic data) ---

PROMPT_ENVELOPE = (
    "{statement}\n\n"
    "Think step by step inside <think> and </think> tags, then give only "
    "your final answer after the closing tag.\n"
    "Final answer format: {hint}."
)


def render_prompt(instance: Instance) -> str:
    td = task_def(instance.task)
    return PROMPT_ENVELOPE.format(statement=td.prompt(instance.payload),
                                  hint=td.answer_hint)


def prompt_view(instance: Instance) -> dict:
    return {
        "instance_id": instance.instance_id,
        "prompt": render_prompt(instance),
        "task": instance.task.value,
        "difficulty": instance.difficulty.value,
        "seed": instance.seed,
    }


def all_tasks() -> tuple[TaskId, ...]:
    return tuple(REGISTRY)
