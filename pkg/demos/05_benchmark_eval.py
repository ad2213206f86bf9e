#!/usr/bin/env python3
"""Benchmark evaluation: Success Rate and Quality Ratio.

A miniature benchmark (3 instances per task instead of 100) is scored
against three completion sets: the heuristic baselines (SR 100 / QR 1 by
construction), a degraded set, and no completions at all.
"""
import optforge as of
from optforge.answers import format_solution
from optforge.bench import render_report

corpus = of.build_benchmark(base_seed=123, per_task=3)
print("benchmark slice:", len(corpus), "instances, digest",
      of.corpus_digest(corpus)[:16], "...")

heuristic = {}
for inst in corpus:
    solution, _ = of.heuristic_solve(inst)
    heuristic[inst.instance_id] = \
        f"<think>baseline</think>\n{format_solution(solution)}"

print("\n--- heuristic completions ---")
print(render_report(of.evaluate(corpus, heuristic)))

degraded = dict(heuristic)
for k, inst in enumerate(corpus):
    if k % 3 == 0:
        degraded[inst.instance_id] = "<think>guess</think>\n[987654]"
    elif k % 3 == 1:
        del degraded[inst.instance_id]

print("\n--- degraded completions (1/3 infeasible, 1/3 missing) ---")
print(render_report(of.evaluate(corpus, degraded)))

print("\n--- no completions ---")
report = of.evaluate(corpus, {})
print(f"overall SR={float(report.overall.sr) * 100:.1f} "
      f"QR={float(report.overall.qr):.3f}")
