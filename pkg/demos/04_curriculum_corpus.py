#!/usr/bin/env python3
"""Curriculum replay corpora: stages x (easy -> medium -> hard).

The default plan is 3 stages x 5,000 instances at proportions 5:4:1 with
fresh seeds every stage. Here we emit a miniature plan and inspect the
files: the corpus holds prompt views only, the sidecar holds the planted
answers and baselines.
"""
import json
import tempfile
from pathlib import Path

import optforge as of

plan = of.plan_curriculum(stages=2, per_stage_total=10, proportions=(5, 4, 1),
                          base_seed=0)
print("tier counts per stage:", plan.tier_counts)
print("rows:", len(plan.rows))
for row in plan.rows[:6]:
    print(f"  stage={row.stage} tier={row.tier.value:<7} "
          f"task={row.task.value:<22} seed={row.seed}")

with tempfile.TemporaryDirectory() as tmp:
    corpus = Path(tmp) / "corpus.jsonl"
    manifest = of.emit_corpus(plan, corpus)
    print("\nemitted", len(manifest.rows), "records, digest",
          manifest.digest[:16], "...")
    first = json.loads(corpus.read_text().splitlines()[0])
    print("corpus record keys:", list(first))
    print("prompt starts:", first["prompt"][:88], "...")
    side = json.loads((Path(tmp) / "corpus.jsonl.answers")
                      .read_text().splitlines()[0])
    print("sidecar record keys:", list(side))

    again = of.emit_corpus(plan, Path(tmp) / "again.jsonl")
    print("re-emission digest identical:", again.digest == manifest.digest)

print("\nthe default training plan (not emitted here):")
default = of.plan_curriculum()
print("stages:", default.stages, " per stage:", default.per_stage_total,
      " total:", len(default.rows))
