"""Clique / MIS / coloring: worked-example fixtures and exhaustive oracles."""
import pytest

import optforge as of
from optforge.rng import SplitMix64
from optforge.tasks import graphs
from optforge.types import ColorVector, Difficulty, IndexList

from oracles import (brute_max_clique_size, brute_max_independent_size,
                     chromatic_number)

# worked-example graphs
CLIQUE_G = graphs.UndirectedGraph(
    5, ((1, 2, 3, 4), (0, 3, 4), (0, 3), (0, 1, 2, 4), (0, 1, 3)))
MIS_G = graphs.UndirectedGraph(4, ((1, 2), (0, 2, 3), (0, 1, 3), (1, 2)))
# 4-cycle 0-1-2-3-0: the relabeling under which the worked coloring is proper
CYCLE_G = graphs.UndirectedGraph(4, ((1, 3), (0, 2), (1, 3), (0, 2)))


class TestCliqueFixtures:
    def test_reference_clique(self):
        got = graphs.verify_clique(CLIQUE_G, IndexList((0, 1, 3, 4)))
        assert got.feasible and got.objective == 4

    def test_non_adjacent_pair_rejected(self):
        got = graphs.verify_clique(CLIQUE_G, IndexList((0, 1, 2)))
        assert not got.feasible
        assert got.violations[0][0] == "not_adjacent"

    def test_single_vertex_and_empty(self):
        assert graphs.verify_clique(CLIQUE_G, IndexList((2,))).objective == 1
        assert graphs.verify_clique(CLIQUE_G, IndexList(())).objective == 0

    def test_exact_search_matches_brute_force(self):
        assert len(graphs.max_clique_exact(CLIQUE_G)) == \
            brute_max_clique_size(5, CLIQUE_G.neighbor_sets()) == 4

    def test_greedy_reaches_the_maximum_here(self):
        sol, obj = graphs.solve_clique(CLIQUE_G, IndexList(()), None)
        assert obj == 4 and graphs.verify_clique(CLIQUE_G, sol).feasible


class TestMisFixtures:
    def test_reference_set(self):
        got = graphs.verify_mis(MIS_G, IndexList((0, 3)))
        assert got.feasible and got.objective == 2

    def test_adjacent_pair_rejected(self):
        got = graphs.verify_mis(MIS_G, IndexList((0, 1)))
        assert not got.feasible and got.violations[0][0] == "adjacent"

    def test_edgeless_graph_takes_everything(self):
        g = graphs.UndirectedGraph(5, ((), (), (), (), ()))
        sol, obj = graphs.solve_mis(g, IndexList(()), None)
        assert obj == 5 and sol.ids == (0, 1, 2, 3, 4)

    def test_complete_graph_takes_one(self):
        g = graphs.graph_from_edges(
            5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        sol, obj = graphs.solve_mis(g, IndexList(()), None)
        assert obj == 1


class TestColoringFixtures:
    def test_two_coloring_of_the_cycle(self):
        got = graphs.verify_coloring(CYCLE_G, ColorVector((1, 2, 1, 2)))
        assert got.feasible and got.objective == 2

    def test_same_color_edge_rejected(self):
        got = graphs.verify_coloring(CYCLE_G, ColorVector((1, 1, 2, 2)))
        assert not got.feasible
        assert got.violations[0][0] == "adjacent_same_color"

    def test_length_mismatch(self):
        got = graphs.verify_coloring(CYCLE_G, ColorVector((1, 2, 1)))
        assert got.violations[0][0] == "color_vector_length"

    def test_nonpositive_color(self):
        got = graphs.verify_coloring(CYCLE_G, ColorVector((1, 2, 1, 0)))
        assert got.violations[0][0] == "color_not_positive"

    def test_noncontiguous_palette_is_legal(self):
        got = graphs.verify_coloring(CYCLE_G, ColorVector((7, 99, 7, 99)))
        assert got.feasible and got.objective == 2

    def test_dsatur_on_triangle(self):
        k3 = graphs.graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert len(set(graphs.dsatur_coloring(k3).colors)) == 3


@pytest.mark.parametrize("task,tiers,gen,key", [
    (of.TaskId.MAX_CLIQUE, graphs.CLIQUE_TIERS, graphs.gen_clique, "clique"),
    (of.TaskId.MAX_INDEPENDENT_SET, graphs.MIS_TIERS, graphs.gen_mis,
     "independent"),
], ids=["clique", "mis"])
def test_planted_set_tier_parameters(task, tiers, gen, key):
    for tier in Difficulty:
        row = tiers[tier]
        for seed in range(25):
            rng = SplitMix64.from_parts("graph-tier", task.value, tier.value,
                                        seed)
            payload, planted = gen(row, rng)
            assert row["vertices"][0] <= payload.n <= row["vertices"][1]
            verdict = (graphs.verify_clique if key == "clique"
                       else graphs.verify_mis)(payload, planted)
            assert verdict.feasible
            if key == "independent":
                lo, hi = row[key]
                assert lo <= len(planted.ids) <= hi
            else:
                # clique plants may be repaired upward by the exact search
                assert len(planted.ids) >= row[key][0]


def test_clique_planted_is_maximum():
    # the generator verifies plants against exact search at these sizes
    for tier in Difficulty:
        for seed in range(15):
            rng = SplitMix64.from_parts("clq-max", tier.value, seed)
            payload, planted = graphs.gen_clique(graphs.CLIQUE_TIERS[tier], rng)
            assert len(planted.ids) == len(graphs.max_clique_exact(payload))


@pytest.mark.parametrize("tier", list(Difficulty), ids=lambda d: d.value)
def test_coloring_tier_parameters(tier):
    row = graphs.COLORING_TIERS[tier]
    for seed in range(25):
        rng = SplitMix64.from_parts("col-tier", tier.value, seed)
        payload, planted = graphs.gen_coloring(row, rng)
        assert row["vertices"][0] <= payload.n <= row["vertices"][1]
        verdict = graphs.verify_coloring(payload, planted)
        assert verdict.feasible
        assert row["colors"][0] <= verdict.objective <= row["colors"][1]


def test_coloring_planted_uses_exactly_k_colors():
    row = graphs.COLORING_TIERS[Difficulty.MEDIUM]
    for seed in range(25):
        rng = SplitMix64.from_parts("col-k", seed)
        payload, planted = graphs.gen_coloring(row, rng)
        ks = sorted(set(planted.colors))
        assert ks == list(range(1, len(ks) + 1))
        assert graphs.verify_coloring(payload, planted).objective == len(ks)


SMALL_CLIQUE_ROW = {"vertices": (10, 14), "clique": (3, 5)}
SMALL_MIS_ROW = {"vertices": (10, 14), "independent": (3, 5)}
SMALL_COLORING_ROW = {"vertices": (6, 10), "colors": (2, 3), "density": 0.3}


def test_clique_solver_against_exhaustive_oracle():
    exact_hits = 0
    for seed in range(100):
        rng = SplitMix64.from_parts("clq-oracle", seed)
        payload, planted = graphs.gen_clique(SMALL_CLIQUE_ROW, rng)
        sol, obj = graphs.solve_clique(payload, planted, None)
        optimum = brute_max_clique_size(payload.n, payload.neighbor_sets())
        assert obj <= optimum
        exact_hits += obj == optimum
    assert exact_hits >= 90


def test_mis_solver_against_exhaustive_oracle():
    exact_hits = 0
    for seed in range(100):
        rng = SplitMix64.from_parts("mis-oracle", seed)
        payload, planted = graphs.gen_mis(SMALL_MIS_ROW, rng)
        sol, obj = graphs.solve_mis(payload, planted, None)
        optimum = brute_max_independent_size(payload.n, payload.neighbor_sets())
        assert obj <= optimum
        exact_hits += obj == optimum
    assert exact_hits >= 90


def test_dsatur_bounded_by_chromatic_number_and_max_degree():
    for seed in range(60):
        rng = SplitMix64.from_parts("dsatur-oracle", seed)
        payload, planted = graphs.gen_coloring(SMALL_COLORING_ROW, rng)
        chromatic = chromatic_number(payload.n, payload.neighbor_sets())
        dsatur_k = len(set(graphs.dsatur_coloring(payload).colors))
        planted_k = len(set(planted.colors))
        max_degree = max(len(a) for a in payload.adjacency)
        assert chromatic <= dsatur_k <= max_degree + 1
        assert planted_k >= chromatic
