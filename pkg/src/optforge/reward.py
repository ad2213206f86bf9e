"""Quality-aware scoring of model completions.

A completion is scored in three tiers: structure (+1/-1 for the
<think>-then-answer format), feasibility (-1.5 when the answer is
infeasible or unparseable), and a quality ratio relative to the stored
heuristic baseline when feasible. The total is the sum of the format
score and the feasibility component, so the codomain is
{-2.5, -0.5} union (1, 2] (a feasible answer with objective 0 scores
exactly 1.0; see the degenerate-objective notes).

Quality ratios are exact fractions. The training-reward path clamps the
ratio at 1; the benchmark path reports it unclamped.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import answers
from .engine import verify
from .registry import task_def
from .types import Instance, Sense, Solution, VerifyResult

FORMAT_BONUS = 1
FORMAT_PENALTY = -1
INFEASIBLE_PENALTY = Fraction(-3, 2)

THINK_OPEN = "<think>"
THINK_CLOSE = "</think>"


class DegenerateObjectiveError(ValueError):
    """Objective 0 on a minimization task: the quality ratio is undefined."""


@dataclass(frozen=True)
class RewardBreakdown:
    format_score: int
    feasibility_component: Fraction
    optimality: Optional[Fraction]
    total: Fraction
    parsed_solution: Optional[Solution]
    verify: Optional[VerifyResult]


@dataclass(frozen=True)
class QualityRatio:
    """Benchmark-side quality: 0 for invalid, unclamped otherwise."""
    value: Fraction


def check_format(completion: str, task) -> tuple[bool, Optional[str]]:
    """Format gate: exactly one think block, then a parseable final answer."""
    extracted = _extract(completion, task)
    if extracted is None:
        return False, None
    return True, extracted[0]


def _extract(completion: str, task) -> Optional[tuple[str, Solution]]:
    if completion.count(THINK_OPEN) != 1 or completion.count(THINK_CLOSE) != 1:
        return None
    open_at = completion.index(THINK_OPEN)
    close_at = completion.index(THINK_CLOSE)
    if close_at < open_at:
        return None
    tail = completion[close_at + len(THINK_CLOSE):]
    if not tail.strip():
        return None
    kind = task_def(task).answer_kind
    return answers.last_parseable_answer(tail, kind)


def compute_quality(instance: Instance, objective: int,
                    clamp: bool = True) -> Fraction:
    """Quality of a feasible objective against the heuristic baseline."""
    baseline = instance.heuristic_objective
    assert baseline > 0
    if instance.task.sense is Sense.MINIMIZE:
        if objective == 0:
            raise DegenerateObjectiveError(
                f"objective 0 on minimization task {instance.task.value}")
        ratio = Fraction(baseline, objective)
    else:
        ratio = Fraction(objective, baseline)
    if clamp:
        ratio = min(ratio, Fraction(1))
    return ratio


def quality_ratio(instance: Instance, result: Optional[VerifyResult]) -> QualityRatio:
    if result is None or not result.feasible:
        return QualityRatio(Fraction(0))
    return QualityRatio(compute_quality(instance, result.objective, clamp=False))


def score(instance: Instance, completion: str) -> RewardBreakdown:
    """Score one completion; total = format_score + feasibility_component."""
    extracted = _extract(completion, instance.task)
    if extracted is None:
        # unparseable answers cannot be verified: treated as infeasible
        return RewardBreakdown(
            format_score=FORMAT_PENALTY,
            feasibility_component=INFEASIBLE_PENALTY,
            optimality=None,
            total=FORMAT_PENALTY + INFEASIBLE_PENALTY,
            parsed_solution=None,
            verify=None,
        )
    _, solution = extracted
    result = verify(instance, solution)
    if not result.feasible:
        return RewardBreakdown(
            format_score=FORMAT_BONUS,
            feasibility_component=INFEASIBLE_PENALTY,
            optimality=None,
            total=FORMAT_BONUS + INFEASIBLE_PENALTY,
            parsed_solution=solution,
            verify=result,
        )
    quality = compute_quality(instance, result.objective, clamp=True)
    return RewardBreakdown(
        format_score=FORMAT_BONUS,
        feasibility_component=quality,
        optimality=quality,
        total=FORMAT_BONUS + quality,
        parsed_solution=solution,
        verify=result,
    )


def breakdown_to_json(instance_id: str, breakdown: RewardBreakdown) -> dict:
    """Wire shape for CLI/service scoring; rationals as canonical strings."""
    return {
        "instance_id": instance_id,
        "format_score": breakdown.format_score,
        "feasibility_component": str(breakdown.feasibility_component),
        "optimality": (None if breakdown.optimality is None
                       else str(breakdown.optimality)),
        "total": str(breakdown.total),
        "feasible": bool(breakdown.verify.feasible) if breakdown.verify else False,
        "objective": (breakdown.verify.objective
                      if breakdown.verify and breakdown.verify.feasible else None),
    }
