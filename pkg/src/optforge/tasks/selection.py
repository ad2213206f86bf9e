"""Subset Sum, Set Cover and Knapsack: generators, verifiers, baselines.

Baselines are exact pseudo-polynomial dynamic programs for subset sum and
knapsack (cheap at these scales, so the baseline objective is a true
optimum) and the classical greedy for set cover.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..canonical import int_key_map, parse_int_key_map
from ..rng import SplitMix64
from ..types import (Difficulty, Impossible, IndexList, Solution,
                     VerifyResult, feasible, infeasible)

# --- Subset Sum ---

@dataclass(frozen=True)
class SubsetSumPayload:
    numbers: tuple[int, ...]  # ids are 0..n-1
    target: int


SUBSET_SUM_TIERS = {
    Difficulty.EASY: {"n": (5, 10), "solution": (4, 8), "values": (1, 5)},
    Difficulty.MEDIUM: {"n": (8, 12), "solution": (4, 8), "values": (1, 10)},
    Difficulty.HARD: {"n": (12, 15), "solution": (8, 12), "values": (1, 15)},
    Difficulty.BENCHMARK: {"n": (15, 20), "solution": (10, 15), "values": (1, 15)},
}


def gen_subset_sum(row: dict, rng: SplitMix64) -> tuple[SubsetSumPayload, Solution]:
    while True:
        n = rng.randint(*row["n"])
        k = rng.randint(*row["solution"])
        if k <= n:
            break
    numbers = tuple(rng.randint(*row["values"]) for _ in range(n))
    planted = sorted(rng.sample(range(n), k))
    target = sum(numbers[i] for i in planted)
    return SubsetSumPayload(numbers, target), IndexList(tuple(planted))


def verify_subset_sum(payload: SubsetSumPayload, sol: IndexList) -> VerifyResult:
    violations = []
    seen = set()
    for i in sol.ids:
        if i in seen:
            violations.append(("duplicate_id", f"index {i} appears twice"))
        seen.add(i)
        if not 0 <= i < len(payload.numbers):
            violations.append(("unknown_id", f"index {i} out of range"))
    if violations:
        return infeasible(violations)
    total = sum(payload.numbers[i] for i in sol.ids)
    if total != payload.target:
        return infeasible([("target_mismatch",
                            f"sum {total} != target {payload.target}")])
    return feasible(len(sol.ids))


def solve_subset_sum(payload: SubsetSumPayload, planted: Solution,
                     rng: SplitMix64) -> tuple[Solution, int]:
    """Exact maximum-cardinality subset summing to the target (DP over sums)."""
    nums, target = payload.numbers, payload.target
    n = len(nums)
    NEG = -1
    dp = [[NEG] * (target + 1) for _ in range(n + 1)]
    dp[0][0] = 0
    for i in range(n):
        a = nums[i]
        prev, cur = dp[i], dp[i + 1]
        for s in range(target + 1):
            best = prev[s]
            if s >= a and prev[s - a] >= 0 and prev[s - a] + 1 > best:
                best = prev[s - a] + 1
            cur[s] = best
    assert dp[n][target] >= 0  # planted subset guarantees reachability
    ids = []
    s = target
    for i in range(n, 0, -1):
        if dp[i][s] != dp[i - 1][s]:  # taking item i-1 is forced
            ids.append(i - 1)
            s -= nums[i - 1]
    ids.reverse()
    return IndexList(tuple(ids)), dp[n][target]


# --- Set Cover ---

@dataclass(frozen=True)
class SetCoverPayload:
    universe: tuple[int, ...]
    subsets: tuple[tuple[int, ...], ...]  # ids are 0..len-1


SET_COVER_TIERS = {
    Difficulty.EASY: {"universe": (10, 20), "subsets": (5, 10), "factor": 0.4},
    Difficulty.MEDIUM: {"universe": (20, 25), "subsets": (10, 15), "factor": 0.4},
    Difficulty.HARD: {"universe": (25, 30), "subsets": (15, 25), "factor": 0.4},
    Difficulty.BENCHMARK: {"universe": (30, 40), "subsets": (20, 30), "factor": 0.4},
}


def gen_set_cover(row: dict, rng: SplitMix64) -> tuple[SetCoverPayload, Solution]:
    m = rng.randint(*row["universe"])
    s_count = rng.randint(*row["subsets"])
    target = max(1, round(row["factor"] * m))
    perm = list(range(m))
    rng.shuffle(perm)
    chunks: list[list[int]] = []
    i = 0
    while i < m:
        size = rng.randint(max(1, target - 2), target + 2)
        chunks.append(sorted(perm[i:i + size]))
        i += size
    while len(chunks) > s_count:  # cannot happen under the shipped tiers
        tail = chunks.pop()
        chunks[-1] = sorted(set(chunks[-1]) | set(tail))
    subsets = [tuple(c) for c in chunks]
    for _ in range(s_count - len(chunks)):
        size = min(m, rng.randint(max(1, target - 2), target + 2))
        subsets.append(tuple(sorted(rng.sample(range(m), size))))
    order = list(range(s_count))
    rng.shuffle(order)
    placed = tuple(subsets[k] for k in order)
    planted = sorted(j for j, k in enumerate(order) if k < len(chunks))
    payload = SetCoverPayload(tuple(range(m)), placed)
    return payload, IndexList(tuple(planted))


def verify_set_cover(payload: SetCoverPayload, sol: Solution) -> VerifyResult:
    universe = set(payload.universe)
    if isinstance(sol, Impossible):
        # Payload invariant guarantees the full family covers U, so a
        # cover always exists and the sentinel never verifies feasible.
        covered = set()
        for sub in payload.subsets:
            covered.update(sub)
        if covered >= universe:
            return infeasible([("cover_exists", "a cover exists")])
        return feasible(0)
    violations = []
    seen = set()
    for i in sol.ids:
        if i in seen:
            violations.append(("duplicate_id", f"subset {i} chosen twice"))
        seen.add(i)
        if not 0 <= i < len(payload.subsets):
            violations.append(("unknown_id", f"unknown subset id {i}"))
    if violations:
        return infeasible(violations)
    covered = set()
    for i in sol.ids:
        covered.update(payload.subsets[i])
    missing = sorted(universe - covered)
    if missing:
        return infeasible([("uncovered",
                            f"element {missing[0]} uncovered")])
    return feasible(len(sol.ids))


def solve_set_cover(payload: SetCoverPayload, planted: Solution,
                    rng: SplitMix64) -> tuple[Solution, int]:
    """Greedy max-uncovered-gain cover; ties broken by lowest subset id."""
    uncovered = set(payload.universe)
    chosen = []
    sets = [set(s) for s in payload.subsets]
    while uncovered:
        best_id, best_gain = -1, 0
        for j, sub in enumerate(sets):
            gain = len(sub & uncovered)
            if gain > best_gain:
                best_id, best_gain = j, gain
        assert best_id >= 0  # family covers U by payload invariant
        chosen.append(best_id)
        uncovered -= sets[best_id]
    chosen.sort()
    return IndexList(tuple(chosen)), len(chosen)


# --- Knapsack ---

@dataclass(frozen=True)
class KnapsackPayload:
    items: tuple[tuple[int, int], ...]  # id -> (weight, value)
    capacity: int


KNAPSACK_TIERS = {
    Difficulty.EASY: {"solution": (6, 10), "items": (15, 25),
                      "weights": (5, 25), "ratio": (1.8, 2.5),
                      "capacity_factor": (1.1, 1.4)},
    Difficulty.MEDIUM: {"solution": (8, 12), "items": (25, 35),
                        "weights": (20, 80), "ratio": (1.5, 2.0),
                        "capacity_factor": (1.05, 1.25)},
    Difficulty.HARD: {"solution": (15, 25), "items": (35, 60),
                      "weights": (50, 200), "ratio": (1.2, 1.6),
                      "capacity_factor": (1.02, 1.15)},
    Difficulty.BENCHMARK: {"solution": (25, 35), "items": (55, 80),
                           "weights": (50, 200), "ratio": (1.2, 1.6),
                           "capacity_factor": (1.02, 1.15)},
}


def gen_knapsack(row: dict, rng: SplitMix64) -> tuple[KnapsackPayload, Solution]:
    while True:
        n = rng.randint(*row["items"])
        k = rng.randint(*row["solution"])
        if k <= n:
            break
    lo_ratio = row["ratio"][0]
    solution_items = []
    for _ in range(k):
        w = rng.randint(*row["weights"])
        solution_items.append((w, max(1, round(w * rng.uniform(*row["ratio"])))))
    total_w = sum(w for w, _ in solution_items)
    capacity = max(total_w, int(total_w * rng.uniform(*row["capacity_factor"])))
    items = list(solution_items)
    for _ in range(n - k):
        w = rng.randint(*row["weights"])
        # distractors sit strictly below the solution ratio band
        ratio = rng.uniform(0.60 * lo_ratio, 0.95 * lo_ratio)
        items.append((w, max(1, round(w * ratio))))
    order = list(range(n))
    rng.shuffle(order)
    placed = tuple(items[j] for j in order)
    planted = sorted(i for i, j in enumerate(order) if j < k)
    return KnapsackPayload(placed, capacity), IndexList(tuple(planted))


def verify_knapsack(payload: KnapsackPayload, sol: IndexList) -> VerifyResult:
    violations = []
    seen = set()
    for i in sol.ids:
        if i in seen:
            violations.append(("duplicate_id", f"item {i} chosen twice"))
        seen.add(i)
        if not 0 <= i < len(payload.items):
            violations.append(("unknown_id", f"unknown item id {i}"))
    if violations:
        return infeasible(violations)
    weight = sum(payload.items[i][0] for i in sol.ids)
    if weight > payload.capacity:
        return infeasible([("capacity_exceeded",
                            f"weight {weight} > capacity {payload.capacity}")])
    return feasible(sum(payload.items[i][1] for i in sol.ids))


def solve_knapsack(payload: KnapsackPayload, planted: Solution,
                   rng: SplitMix64) -> tuple[Solution, int]:
    """Exact 0/1 knapsack via DP over capacity (integer weights)."""
    cap = payload.capacity
    n = len(payload.items)
    dp = np.zeros(cap + 1, dtype=np.int64)
    took = np.zeros((n, cap + 1), dtype=bool)
    for i, (w, v) in enumerate(payload.items):
        if w > cap:
            continue
        cand = dp[:cap - w + 1] + v
        better = cand > dp[w:]
        took[i, w:] = better
        dp[w:] = np.where(better, cand, dp[w:])
    ids = []
    s = cap
    for i in range(n - 1, -1, -1):
        if took[i, s]:
            ids.append(i)
            s -= payload.items[i][0]
    ids.reverse()
    return IndexList(tuple(ids)), int(dp[cap])


# --- payload codecs and prompts ---

def subset_sum_payload_to_json(p: SubsetSumPayload) -> dict:
    return {"numbers": int_key_map(dict(enumerate(p.numbers))),
            "target": p.target}


def subset_sum_payload_from_json(obj: dict) -> SubsetSumPayload:
    nums = parse_int_key_map(obj["numbers"])
    assert sorted(nums) == list(range(len(nums))), "ids must be contiguous"
    return SubsetSumPayload(tuple(int(nums[i]) for i in range(len(nums))),
                            int(obj["target"]))


def set_cover_payload_to_json(p: SetCoverPayload) -> dict:
    return {"universe": list(p.universe),
            "subsets": int_key_map({i: list(s) for i, s in enumerate(p.subsets)})}


def set_cover_payload_from_json(obj: dict) -> SetCoverPayload:
    subs = parse_int_key_map(obj["subsets"])
    universe = tuple(int(x) for x in obj["universe"])
    subsets = tuple(tuple(int(x) for x in subs[i]) for i in range(len(subs)))
    uni = set(universe)
    covered = set()
    for s in subsets:
        assert set(s) <= uni, "subset not within universe"
        covered.update(s)
    assert covered == uni, "subset family must cover the universe"
    return SetCoverPayload(universe, subsets)


def knapsack_payload_to_json(p: KnapsackPayload) -> dict:
    items = {i: {"weight": w, "value": v} for i, (w, v) in enumerate(p.items)}
    return {"items": int_key_map(items), "capacity": p.capacity}


def knapsack_payload_from_json(obj: dict) -> KnapsackPayload:
    raw = parse_int_key_map(obj["items"])
    items = tuple((int(raw[i]["weight"]), int(raw[i]["value"]))
                  for i in range(len(raw)))
    return KnapsackPayload(items, int(obj["capacity"]))


def subset_sum_prompt(p: SubsetSumPayload) -> str:
    nums = ", ".join(f"{i}: {v}" for i, v in enumerate(p.numbers))
    return (
        "Subset sum with maximum cardinality. Given the numbers "
        f"{{{nums}}} (id: value), find a set of ids whose values sum to "
        f"exactly {p.target}. Among all valid sets, use as many ids as "
        "possible. Each id may be used at most once."
    )


def set_cover_prompt(p: SetCoverPayload) -> str:
    subs = ", ".join(f"{i}: {{{', '.join(map(str, s))}}}"
                     for i, s in enumerate(p.subsets))
    uni = ", ".join(map(str, p.universe))
    return (
        f"Set cover. The universe is {{{uni}}} and the available subsets "
        f"are {{{subs}}} (id: elements). Choose as few subset ids as "
        "possible so that their union equals the universe. If no "
        'selection can cover the universe, answer "Impossible".'
    )


def knapsack_prompt(p: KnapsackPayload) -> str:
    items = ", ".join(f"{i}: ({w}, {v})" for i, (w, v) in enumerate(p.items))
    return (
        f"0/1 knapsack. Items {{{items}}} are given as id: (weight, value) "
        f"and the knapsack capacity is {p.capacity}. Choose item ids whose "
        "total weight stays within the capacity and whose total value is "
        "as large as possible. Each item may be chosen at most once."
    )
