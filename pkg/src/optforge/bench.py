"""Fixed benchmark corpus and SR/QR evaluation.

The benchmark holds 100 instances per task at the benchmark tier (1,000
total). Success Rate is the fraction of instances with a feasible
answer; Quality Ratio compares the answer's objective to the stored
heuristic baseline (0 for invalid answers, unclamped otherwise).
Category scores are unweighted means over member tasks and the overall
score is the macro-average over all 10 tasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .canonical import canonical_json, sha256_hex
from .engine import all_tasks, encode_instance, generate
from .reward import quality_ratio, score
from .types import Category, Difficulty, Instance, TaskId

INSTANCES_PER_TASK = 100


def build_benchmark(base_seed: int = 0,
                    per_task: int = INSTANCES_PER_TASK) -> list[Instance]:
    """Benchmark-tier corpus: ``per_task`` instances for every task."""
    instances = []
    seed = base_seed
    for task in all_tasks():
        for _ in range(per_task):
            instances.append(generate(task, Difficulty.BENCHMARK, seed))
            seed += 1
    return instances


def corpus_digest(instances: list[Instance]) -> str:
    return sha256_hex("".join(encode_instance(i) + "\n" for i in instances))


@dataclass(frozen=True)
class MetricPair:
    sr: Fraction
    qr: Fraction
    n: int


@dataclass(frozen=True)
class EvalReport:
    per_task: dict[TaskId, MetricPair]
    per_category: dict[Category, MetricPair]
    overall: MetricPair
    n_instances: int
    unknown_ids: tuple[str, ...]  # completion keys with no instance


def _mean(values: list[Fraction]) -> Fraction:
    return sum(values, Fraction(0)) / len(values) if values else Fraction(0)


def evaluate(instances: list[Instance],
             completions: Mapping[str, str]) -> EvalReport:
    """Score completions keyed by instance_id; missing entries are invalid."""
    per_task_sr: dict[TaskId, list[Fraction]] = {t: [] for t in all_tasks()}
    per_task_qr: dict[TaskId, list[Fraction]] = {t: [] for t in all_tasks()}
    known = set()
    for inst in instances:
        known.add(inst.instance_id)
        completion = completions.get(inst.instance_id)
        if completion is None:
            feasible = False
            qr = Fraction(0)
        else:
            breakdown = score(inst, completion)
            feasible = bool(breakdown.verify and breakdown.verify.feasible)
            qr = quality_ratio(inst, breakdown.verify).value
        task = inst.task
        per_task_sr[task].append(Fraction(1 if feasible else 0))
        per_task_qr[task].append(qr)
    per_task = {}
    for task in all_tasks():
        if per_task_sr[task]:
            per_task[task] = MetricPair(_mean(per_task_sr[task]),
                                        _mean(per_task_qr[task]),
                                        len(per_task_sr[task]))
    per_category: dict[Category, MetricPair] = {}
    for category in Category:
        members = [task for task in per_task if task.category is category]
        if members:
            per_category[category] = MetricPair(
                _mean([per_task[t].sr for t in members]),
                _mean([per_task[t].qr for t in members]),
                sum(per_task[t].n for t in members))
    overall = MetricPair(
        _mean([per_task[t].sr for t in per_task]),
        _mean([per_task[t].qr for t in per_task]),
        sum(per_task[t].n for t in per_task))
    unknown = tuple(sorted(set(completions) - known))
    return EvalReport(per_task, per_category, overall,
                      len(instances), unknown)


_CATEGORY_COLUMNS = (Category.GRAPH, Category.SCHEDULE, Category.PARTITION,
                     Category.SELECTION, Category.PLANNING)


def render_report(report: EvalReport) -> str:
    """Plain-text table: SR/QR per category, then Overall."""
    headers = [c.value.capitalize() for c in _CATEGORY_COLUMNS] + ["Overall"]
    pairs = [report.per_category.get(c) for c in _CATEGORY_COLUMNS]
    pairs.append(report.overall)
    rows = []
    top = [""]
    sub = ["metric"]
    for h in headers:
        top.extend([h, ""])
        sub.extend(["SR", "QR"])
    values = ["score"]
    for pair in pairs:
        if pair is None:
            values.extend(["-", "-"])
        else:
            values.extend([f"{float(pair.sr) * 100:.1f}", f"{float(pair.qr):.3f}"])
    widths = [max(len(top[i]), len(sub[i]), len(values[i]))
              for i in range(len(sub))]
    def fmt(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    rows.append(fmt(top))
    rows.append(fmt(sub))
    rows.append(fmt(["-" * w for w in widths]))
    rows.append(fmt(values))
    per_task_lines = ["", "per task:"]
    for task, pair in report.per_task.items():
        per_task_lines.append(
            f"  {task.value:<22} SR {float(pair.sr) * 100:6.1f}   "
            f"QR {float(pair.qr):.3f}   n={pair.n}")
    return "\n".join(rows + per_task_lines)


def report_to_json(report: EvalReport) -> dict:
    def pair(p: Optional[MetricPair]):
        if p is None:
            return None
        return {"sr": float(p.sr), "qr": float(p.qr),
                "sr_exact": str(p.sr), "qr_exact": str(p.qr), "n": p.n}
    return {
        "per_task": {t.value: pair(p) for t, p in report.per_task.items()},
        "per_category": {c.value: pair(p)
                         for c, p in report.per_category.items()},
        "overall": pair(report.overall),
        "n_instances": report.n_instances,
        "unknown_ids": list(report.unknown_ids),
    }


def report_json_text(report: EvalReport) -> str:
    return canonical_json(report_to_json(report))
