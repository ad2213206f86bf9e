#!/usr/bin/env python3
"""The three-tier reward: format, feasibility, quality.

Totals live in {-2.5, -0.5} union (1, 2]: -2.5 for malformed output,
-0.5 for a well-formed but infeasible answer, and 1 + quality for a
feasible one, where quality compares the answer's objective to the
heuristic baseline (clamped at 1 for training).
"""
import optforge as of
from optforge.answers import format_solution

inst = of.generate(of.TaskId.KNAPSACK, of.Difficulty.EASY, seed=4)
print("instance:", inst.instance_id[:12], "...")
print("capacity:", inst.payload.capacity, " items:", len(inst.payload.items))

cases = {
    "malformed (no think tags)": "here is my answer [0, 1]",
    "well-formed but infeasible": "<think>hmm</think> [" + ", ".join(
        str(i) for i in range(len(inst.payload.items))) + "]",
    "feasible, small value": "<think>one item</think> [0]",
    "heuristic answer": "<think>dp</think> " + format_solution(
        of.heuristic_solve(inst)[0]),
}
for label, completion in cases.items():
    got = of.score(inst, completion)
    print(f"\n{label}")
    print(f"  format={got.format_score:+d}  "
          f"feasibility={got.feasibility_component}  total={got.total}")
    if got.optimality is not None:
        print(f"  quality={got.optimality} "
              f"(~{float(got.optimality):.3f})")

print("\nbenchmark-side quality ratios are unclamped:")
sol, obj = of.heuristic_solve(inst)
print("heuristic QR:",
      of.quality_ratio(inst, of.verify(inst, sol)).value)
