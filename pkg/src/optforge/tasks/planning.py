"""TSP and Hamiltonian Cycle.

The TSP baseline is multi-start nearest-neighbor plus first-improvement
2-opt; the 2-opt scan is a vectorized gain matrix, applied in
lexicographic (i, j) order so runs are exactly reproducible. Hamiltonian
instances are built by planting a random cycle and densifying to the tier
density; the planted cycle is the optimal baseline by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..canonical import int_key_map, parse_int_key_map
from ..rng import SplitMix64
from ..types import (Difficulty, Route, Solution, VerifyResult, feasible,
                     infeasible)
from .graphs import UndirectedGraph, graph_from_edges, graph_from_json, graph_to_json

TSP_DISTANCE_RANGE = (1, 100)
TWO_OPT_BUDGET_FACTOR = 50  # applied moves per start, times n^2
MULTISTART_COUNT = 8


@dataclass(frozen=True)
class TspPayload:
    n: int
    dist: tuple[tuple[int, ...], ...]  # full symmetric matrix, zero diagonal

    def matrix(self) -> np.ndarray:
        return np.array(self.dist, dtype=np.int64)


TSP_TIERS = {
    Difficulty.EASY: {"cities": (10, 20)},
    Difficulty.MEDIUM: {"cities": (20, 30)},
    Difficulty.HARD: {"cities": (35, 45)},
    Difficulty.BENCHMARK: {"cities": (45, 55)},
}


def gen_tsp(row: dict, rng: SplitMix64) -> tuple[TspPayload, Solution]:
    n = rng.randint(*row["cities"])
    lo, hi = row.get("distances", TSP_DISTANCE_RANGE)
    dist = [[0] * n for _ in range(n)]
    for u, v in combinations(range(n), 2):
        d = rng.randint(lo, hi)
        dist[u][v] = dist[v][u] = d
    payload = TspPayload(n, tuple(tuple(r) for r in dist))
    # any closed permutation is feasible; plant a random tour
    perm = list(range(n))
    rng.shuffle(perm)
    planted = Route(tuple(perm + [perm[0]]))
    return payload, planted


def verify_tsp(payload: TspPayload, sol: Route) -> VerifyResult:
    cities = sol.cities
    n = payload.n
    if len(cities) < 2 or cities[0] != cities[-1]:
        return infeasible([("not_closed",
                            "route must end at its starting city")])
    interior = cities[:-1]
    unknown = [c for c in interior if not 0 <= c < n]
    if unknown:
        return infeasible([("unknown_city", f"unknown city {unknown[0]}")])
    seen = set()
    for c in interior:
        if c in seen:
            return infeasible([("city_revisited", f"city {c} revisited")])
        seen.add(c)
    missing = [c for c in range(n) if c not in seen]
    if missing:
        return infeasible([("city_not_visited",
                            f"city {missing[0]} not visited")])
    # interior is a permutation of all n cities, so the route has n edges
    cost = sum(payload.dist[cities[i]][cities[i + 1]] for i in range(n))
    return feasible(cost)


def nearest_neighbor_tour(D: np.ndarray, start: int) -> list[int]:
    n = D.shape[0]
    big = np.iinfo(np.int64).max
    visited = np.zeros(n, dtype=bool)
    visited[start] = True
    tour = [start]
    cur = start
    for _ in range(n - 1):
        d = D[cur].copy()
        d[visited] = big
        cur = int(d.argmin())  # argmin breaks ties toward the lowest city
        tour.append(cur)
        visited[cur] = True
    tour.append(start)
    return tour


def two_opt(D: np.ndarray, tour: list[int], budget: int) -> list[int]:
    """First-improvement 2-opt: lexicographic (i, j) scan, restart per move."""
    t = np.array(tour, dtype=np.int64)
    n = len(t) - 1
    if n < 4:
        return tour
    idx = np.arange(1, n)
    upper = np.triu(np.ones((n - 1, n - 1), dtype=bool), k=1)
    moves = 0
    while moves < budget:
        pre, cur, nxt = t[idx - 1], t[idx], t[idx + 1]
        head = D[pre, cur]             # d(t[i-1], t[i])
        tail = D[cur, nxt]             # d(t[j], t[j+1])
        cross_a = D[np.ix_(pre, cur)]  # d(t[i-1], t[j])
        cross_b = D[np.ix_(cur, nxt)]  # d(t[i], t[j+1])
        gain = head[:, None] + tail[None, :] - cross_a - cross_b
        hits = np.argwhere(upper & (gain > 0))
        if hits.size == 0:
            break
        i = int(hits[0][0]) + 1
        j = int(hits[0][1]) + 1
        t[i:j + 1] = t[i:j + 1][::-1]
        moves += 1
    return [int(c) for c in t]


def tour_cost(D: np.ndarray, tour: list[int]) -> int:
    t = np.array(tour, dtype=np.int64)
    return int(D[t[:-1], t[1:]].sum())


def solve_tsp(payload: TspPayload, planted: Solution,
              rng: SplitMix64) -> tuple[Solution, int]:
    """Nearest-neighbor from min(n, 8) RNG-chosen starts, 2-opt refined."""
    D = payload.matrix()
    n = payload.n
    starts = rng.sample(range(n), min(n, MULTISTART_COUNT))
    budget = TWO_OPT_BUDGET_FACTOR * n * n
    best_tour = None
    best_cost = None
    best_start = None
    for start in starts:
        tour = two_opt(D, nearest_neighbor_tour(D, start), budget)
        cost = tour_cost(D, tour)
        if (best_cost is None or cost < best_cost
                or (cost == best_cost and start < best_start)):
            best_tour, best_cost, best_start = tour, cost, start
    return Route(tuple(best_tour)), best_cost


# --- Hamiltonian Cycle ---

@dataclass(frozen=True)
class HamiltonianPayload:
    graph: UndirectedGraph
    density: float


HAMILTONIAN_TIERS = {
    Difficulty.EASY: {"vertices": (15, 20), "density": 0.2},
    Difficulty.MEDIUM: {"vertices": (20, 30), "density": 0.3},
    Difficulty.HARD: {"vertices": (30, 40), "density": 0.4},
    Difficulty.BENCHMARK: {"vertices": (40, 50), "density": 0.5},
}


def gen_hamiltonian(row: dict, rng: SplitMix64) -> tuple[HamiltonianPayload, Solution]:
    n = rng.randint(*row["vertices"])
    density = row["density"]
    perm = list(range(n))
    rng.shuffle(perm)
    cycle_edges = {tuple(sorted((perm[i], perm[(i + 1) % n])))
                   for i in range(n)}
    target = max(n, round(density * n * (n - 1) / 2))
    extra_pool = [e for e in combinations(range(n), 2) if e not in cycle_edges]
    rng.shuffle(extra_pool)
    edges = list(cycle_edges) + extra_pool[:target - n]
    payload = HamiltonianPayload(graph_from_edges(n, edges), density)
    planted = Route(tuple(perm + [perm[0]]))
    return payload, planted


def verify_hamiltonian(payload: HamiltonianPayload, sol: Route) -> VerifyResult:
    cities = list(sol.cities)
    if len(cities) >= 2 and cities[0] == cities[-1]:
        cities = cities[:-1]  # closed form submitted; normalize to open
    n = payload.graph.n
    unknown = [v for v in cities if not 0 <= v < n]
    if unknown:
        return infeasible([("unknown_vertex", f"unknown vertex {unknown[0]}")])
    seen = set()
    for v in cities:
        if v in seen:
            return infeasible([("vertex_revisited", f"vertex {v} revisited")])
        seen.add(v)
    if len(cities) < 3:
        return infeasible([("cycle_too_short",
                            f"cycle needs >= 3 vertices, got {len(cities)}")])
    nbrs = payload.graph.neighbor_sets()
    for i in range(len(cities)):
        u, v = cities[i], cities[(i + 1) % len(cities)]
        if v not in nbrs[u]:
            return infeasible([("missing_edge", f"no edge {u}-{v}")])
    return feasible(len(cities))


def solve_hamiltonian(payload: HamiltonianPayload, planted: Solution,
                      rng: SplitMix64) -> tuple[Solution, int]:
    # the planted cycle covers all vertices: optimal by definition
    assert isinstance(planted, Route)
    return planted, payload.graph.n


# --- payload codecs and prompts ---

def tsp_payload_to_json(p: TspPayload) -> dict:
    dist = {u: int_key_map({v: p.dist[u][v] for v in range(p.n) if v != u})
            for u in range(p.n)}
    return {"n": p.n, "dist": int_key_map(dist)}


def tsp_payload_from_json(obj: dict) -> TspPayload:
    n = int(obj["n"])
    raw = parse_int_key_map(obj["dist"])
    dist = [[0] * n for _ in range(n)]
    for u in range(n):
        for v, d in parse_int_key_map(raw[u]).items():
            dist[u][v] = int(d)
    for u in range(n):
        for v in range(n):
            if u != v:
                assert dist[u][v] == dist[v][u] > 0, "asymmetric distances"
    return TspPayload(n, tuple(tuple(r) for r in dist))


def hamiltonian_payload_to_json(p: HamiltonianPayload) -> dict:
    return {"graph": graph_to_json(p.graph), "density": p.density}


def hamiltonian_payload_from_json(obj: dict) -> HamiltonianPayload:
    return HamiltonianPayload(graph_from_json(obj["graph"]),
                              float(obj["density"]))


def tsp_prompt(p: TspPayload) -> str:
    rows = ", ".join(
        f"{u}: {{{', '.join(f'{v}: {p.dist[u][v]}' for v in range(p.n) if v != u)}}}"
        for u in range(p.n))
    return (
        f"Traveling salesman. There are {p.n} cities with symmetric "
        f"distances {{{rows}}}. Find the shortest tour that starts and ends "
        "at the same city and visits every other city exactly once."
    )


def hamiltonian_prompt(p: HamiltonianPayload) -> str:
    g = p.graph
    adj = ", ".join(f"{v}: [{', '.join(map(str, g.adjacency[v]))}]"
                    for v in range(g.n))
    return (
        f"Hamiltonian cycle. The undirected graph has {g.n} vertices with "
        f"adjacency lists {{{adj}}}. Find a cycle of distinct vertices "
        "(consecutive vertices must be adjacent, and the last connects back "
        "to the first) that includes as many vertices as possible."
    )
