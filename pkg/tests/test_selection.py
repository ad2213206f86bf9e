"""Subset sum / set cover / knapsack: worked-example fixtures and oracles."""
import math

import pytest

from optforge.rng import SplitMix64
from optforge.tasks import selection
from optforge.types import Difficulty, Impossible, IndexList

from oracles import (brute_knapsack_optimum, brute_set_cover_minimum,
                     brute_subset_sum_max_cardinality)

# worked-example payloads
SS = selection.SubsetSumPayload((2, 3, 7, 8, 5), 10)
SC = selection.SetCoverPayload(
    tuple(range(6)), ((0, 1, 2), (2, 3), (0, 4), (3, 4, 5), (1, 2, 5)))
KN = selection.KnapsackPayload(((3, 4), (4, 5), (7, 10), (8, 11)), 20)


class TestSubsetSumFixtures:
    def test_reference_solution(self):
        got = selection.verify_subset_sum(SS, IndexList((0, 1, 4)))
        assert got.feasible and got.objective == 3

    def test_two_element_solution(self):
        got = selection.verify_subset_sum(SS, IndexList((2, 1)))
        assert got.feasible and got.objective == 2

    def test_empty_is_infeasible_for_positive_target(self):
        assert not selection.verify_subset_sum(SS, IndexList(())).feasible

    def test_duplicate_index(self):
        got = selection.verify_subset_sum(SS, IndexList((0, 0, 1)))
        assert not got.feasible
        assert got.violations[0][0] == "duplicate_id"

    def test_dp_matches_brute_force_maximum(self):
        sol, obj = selection.solve_subset_sum(SS, None, None)
        assert obj == brute_subset_sum_max_cardinality(SS.numbers, SS.target) == 3
        assert selection.verify_subset_sum(SS, sol).objective == obj

    def test_single_forced_item(self):
        payload = selection.SubsetSumPayload((5,), 5)
        sol, obj = selection.solve_subset_sum(payload, None, None)
        assert sol.ids == (0,) and obj == 1


class TestSetCoverFixtures:
    def test_reference_cover(self):
        got = selection.verify_set_cover(SC, IndexList((0, 3, 4)))
        assert got.feasible and got.objective == 3

    def test_smaller_cover_also_feasible(self):
        # the worked example calls [0,3,4] minimal, but [0,3] covers U too
        got = selection.verify_set_cover(SC, IndexList((0, 3)))
        assert got.feasible and got.objective == 2

    def test_uncovered_element_reported(self):
        got = selection.verify_set_cover(SC, IndexList((1, 2)))
        assert not got.feasible
        assert got.violations == (("uncovered", "element 1 uncovered"),)

    def test_impossible_rejected_when_cover_exists(self):
        got = selection.verify_set_cover(SC, Impossible())
        assert not got.feasible
        assert got.violations[0][0] == "cover_exists"

    def test_greedy_finds_the_true_minimum_here(self):
        sol, obj = selection.solve_set_cover(SC, None, None)
        assert obj == brute_set_cover_minimum(SC.universe, SC.subsets) == 2
        assert sol.ids == (0, 3)


class TestKnapsackFixtures:
    def test_reference_selection(self):
        got = selection.verify_knapsack(KN, IndexList((0, 2, 3)))
        assert got.feasible and got.objective == 25
        weight = sum(KN.items[i][0] for i in (0, 2, 3))
        assert weight == 18 <= KN.capacity

    def test_all_items_exceed_capacity(self):
        got = selection.verify_knapsack(KN, IndexList((0, 1, 2, 3)))
        assert not got.feasible
        assert got.violations[0][0] == "capacity_exceeded"

    def test_dp_beats_the_worked_example(self):
        # brute force says 26 via [1,2,3]; the example's [0,2,3] is not optimal
        sol, obj = selection.solve_knapsack(KN, None, None)
        assert obj == brute_knapsack_optimum(KN.items, KN.capacity) == 26
        assert sol.ids == (1, 2, 3)

    def test_empty_selection_is_feasible_zero(self):
        got = selection.verify_knapsack(KN, IndexList(()))
        assert got.feasible and got.objective == 0


@pytest.mark.parametrize("tier", list(Difficulty), ids=lambda d: d.value)
def test_subset_sum_tier_parameters(tier):
    row = selection.SUBSET_SUM_TIERS[tier]
    for seed in range(30):
        rng = SplitMix64.from_parts("ss-tier", tier.value, seed)
        payload, planted = selection.gen_subset_sum(row, rng)
        n = len(payload.numbers)
        assert row["n"][0] <= n <= row["n"][1]
        assert all(row["values"][0] <= v <= row["values"][1]
                   for v in payload.numbers)
        k = len(planted.ids)
        assert row["solution"][0] <= k <= row["solution"][1] and k <= n
        got = selection.verify_subset_sum(payload, planted)
        assert got.feasible and got.objective == k


@pytest.mark.parametrize("tier", list(Difficulty), ids=lambda d: d.value)
def test_set_cover_tier_parameters(tier):
    row = selection.SET_COVER_TIERS[tier]
    for seed in range(30):
        rng = SplitMix64.from_parts("sc-tier", tier.value, seed)
        payload, planted = selection.gen_set_cover(row, rng)
        m = len(payload.universe)
        assert row["universe"][0] <= m <= row["universe"][1]
        assert row["subsets"][0] <= len(payload.subsets) <= row["subsets"][1]
        union = set()
        for s in payload.subsets:
            assert set(s) <= set(payload.universe)
            union.update(s)
        assert union == set(payload.universe)
        assert selection.verify_set_cover(payload, planted).feasible


@pytest.mark.parametrize("tier", list(Difficulty), ids=lambda d: d.value)
def test_knapsack_tier_parameters(tier):
    row = selection.KNAPSACK_TIERS[tier]
    for seed in range(30):
        rng = SplitMix64.from_parts("kn-tier", tier.value, seed)
        payload, planted = selection.gen_knapsack(row, rng)
        assert row["items"][0] <= len(payload.items) <= row["items"][1]
        assert row["solution"][0] <= len(planted.ids) <= row["solution"][1]
        assert all(row["weights"][0] <= w <= row["weights"][1]
                   for w, _ in payload.items)
        verdict = selection.verify_knapsack(payload, planted)
        assert verdict.feasible
        planted_weight = sum(payload.items[i][0] for i in planted.ids)
        assert planted_weight <= payload.capacity


def test_knapsack_dp_equals_brute_force_on_small_instances():
    row = {"solution": (3, 6), "items": (8, 15), "weights": (5, 25),
           "ratio": (1.8, 2.5), "capacity_factor": (1.1, 1.4)}
    for seed in range(200):
        rng = SplitMix64.from_parts("kn-oracle", seed)
        payload, planted = selection.gen_knapsack(row, rng)
        _, dp_value = selection.solve_knapsack(payload, planted, None)
        assert dp_value == brute_knapsack_optimum(payload.items,
                                                  payload.capacity)


def test_subset_sum_dp_at_least_planted_cardinality():
    for tier in Difficulty:
        row = selection.SUBSET_SUM_TIERS[tier]
        for seed in range(50):
            rng = SplitMix64.from_parts("ss-dp", tier.value, seed)
            payload, planted = selection.gen_subset_sum(row, rng)
            _, obj = selection.solve_subset_sum(payload, planted, None)
            assert obj >= len(planted.ids)


def test_greedy_cover_within_log_bound_of_optimum():
    row = {"universe": (8, 15), "subsets": (4, 8), "factor": 0.4}
    for seed in range(60):
        rng = SplitMix64.from_parts("sc-oracle", seed)
        payload, planted = selection.gen_set_cover(row, rng)
        _, greedy = selection.solve_set_cover(payload, planted, None)
        optimum = brute_set_cover_minimum(payload.universe, payload.subsets)
        assert optimum is not None
        assert greedy <= (1 + math.log(len(payload.universe))) * optimum


def test_knapsack_distractors_below_solution_ratio_band():
    row = selection.KNAPSACK_TIERS[Difficulty.EASY]
    lo = row["ratio"][0]
    for seed in range(20):
        rng = SplitMix64.from_parts("kn-band", seed)
        payload, planted = selection.gen_knapsack(row, rng)
        chosen = set(planted.ids)
        for i, (w, v) in enumerate(payload.items):
            if i not in chosen:
                # rounding can nudge a distractor at most half a unit of value
                assert v / w <= 0.95 * lo + 0.5 / w
