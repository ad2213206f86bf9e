#!/usr/bin/env python3
"""Heuristic baselines: the denominators of every quality ratio.

Each task ships a deterministic polynomial-time reference solver
(nearest-neighbor + 2-opt for TSP, Kernighan-Lin for bisection, DSATUR
for coloring, exact DP for knapsack/subset-sum, greedy elsewhere). Its
objective is stored on the instance as the baseline M_h.
"""
import optforge as of
from optforge.answers import format_solution

for task in of.all_tasks():
    inst = of.generate(task, of.Difficulty.MEDIUM, seed=11)
    solution, objective = of.heuristic_solve(inst)
    planted_obj = of.verify(inst, inst.planted).objective
    print(f"{task.value:<22} baseline={objective:<6} planted={planted_obj:<6} "
          f"sense={task.sense.value}")

print("\nnearest-neighbor + 2-opt on a small TSP, against the planted tour:")
inst = of.generate(of.TaskId.TSP, of.Difficulty.EASY, 2)
tour, cost = of.heuristic_solve(inst)
print("heuristic tour:", format_solution(tour))
print("cost:", cost, " planted tour cost:",
      of.verify(inst, inst.planted).objective)

print("\nbaselines re-solve deterministically from the instance seed:")
again, cost_again = of.heuristic_solve(inst)
print("same tour:", again == tour, " same cost:", cost_again == cost)
