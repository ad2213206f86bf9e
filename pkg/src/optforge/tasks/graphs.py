"""Maximum Clique, Maximum Independent Set and Graph Coloring.

Planted structures are embedded in random background graphs. Clique
instances are small enough (n <= 20) that the generator re-checks the
planted clique against an exact branch-and-bound search and repairs the
planted solution if background edges created a larger clique.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..canonical import int_key_map, parse_int_key_map
from ..rng import SplitMix64
from ..types import (ColorVector, Difficulty, IndexList, Solution,
                     VerifyResult, feasible, infeasible)

BACKGROUND_EDGE_PROB = 0.3  # clique/MIS embedding noise


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]  # vertex -> sorted neighbors

    def neighbor_sets(self) -> list[set[int]]:
        return [set(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in self.adjacency[u] if u < v]


def graph_from_edges(n: int, edges) -> UndirectedGraph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        assert u != v, "self-loop"
        adj[u].add(v)
        adj[v].add(u)
    return UndirectedGraph(n, tuple(tuple(sorted(s)) for s in adj))


def graph_to_json(g: UndirectedGraph) -> dict:
    return {"n": g.n,
            "adjacency": int_key_map({v: list(g.adjacency[v])
                                      for v in range(g.n)})}


def graph_from_json(obj: dict) -> UndirectedGraph:
    n = int(obj["n"])
    adj = parse_int_key_map(obj["adjacency"])
    graph = UndirectedGraph(
        n, tuple(tuple(int(u) for u in adj[v]) for v in range(n)))
    sets = graph.neighbor_sets()
    for u in range(n):
        assert u not in sets[u], "self-loop"
        assert all(u in sets[v] for v in sets[u]), "asymmetric adjacency"
    return graph


def max_clique_exact(graph: UndirectedGraph) -> list[int]:
    """Deterministic branch-and-bound maximum clique (fine for n <= ~25)."""
    nbrs = graph.neighbor_sets()
    best: list[int] = []

    def expand(current: list[int], candidates: set[int]):
        nonlocal best
        if len(current) + len(candidates) <= len(best):
            return
        if not candidates:
            if len(current) > len(best):
                best = sorted(current)
            return
        pivot = max(candidates, key=lambda v: (len(nbrs[v] & candidates), -v))
        for v in sorted(candidates - nbrs[pivot]):
            expand(current + [v], candidates & nbrs[v])
            candidates = candidates - {v}

    expand([], set(range(graph.n)))
    return best


# --- Maximum Clique ---

CLIQUE_TIERS = {
    Difficulty.EASY: {"vertices": (4, 8), "clique": (2, 4)},
    Difficulty.MEDIUM: {"vertices": (8, 12), "clique": (2, 4)},
    Difficulty.HARD: {"vertices": (12, 16), "clique": (2, 6)},
    Difficulty.BENCHMARK: {"vertices": (16, 20), "clique": (4, 8)},
}


def gen_clique(row: dict, rng: SplitMix64) -> tuple[UndirectedGraph, Solution]:
    while True:
        n = rng.randint(*row["vertices"])
        k = rng.randint(*row["clique"])
        if k <= n:
            break
    background = row.get("background", BACKGROUND_EDGE_PROB)
    graph = None
    maximum: list[int] = []
    for _ in range(20):
        planted = sorted(rng.sample(range(n), k))
        in_planted = set(planted)
        edges = list(combinations(planted, 2))
        for u, v in combinations(range(n), 2):
            if u in in_planted and v in in_planted:
                continue
            if rng.random() < background:
                edges.append((u, v))
        graph = graph_from_edges(n, edges)
        maximum = max_clique_exact(graph)
        if len(maximum) == k:
            return graph, IndexList(tuple(planted))
    # background noise kept out-growing the plant: keep the last graph and
    # repair by planting the exact maximum clique instead
    return graph, IndexList(tuple(maximum))


def verify_clique(payload: UndirectedGraph, sol: IndexList) -> VerifyResult:
    violations = _check_vertex_ids(payload, sol.ids)
    if violations:
        return infeasible(violations)
    nbrs = payload.neighbor_sets()
    for u, v in combinations(sol.ids, 2):
        if v not in nbrs[u]:
            return infeasible([("not_adjacent",
                                f"vertices {u} and {v} are not adjacent")])
    return feasible(len(sol.ids))


def solve_clique(payload: UndirectedGraph, planted: Solution,
                 rng: SplitMix64) -> tuple[Solution, int]:
    """Better of the planted clique and a greedy max-degree construction."""
    nbrs = payload.neighbor_sets()
    candidates = set(range(payload.n))
    clique: list[int] = []
    while candidates:
        v = max(candidates, key=lambda u: (len(nbrs[u] & candidates), -u))
        clique.append(v)
        candidates = candidates & nbrs[v]
    greedy = IndexList(tuple(sorted(clique)))
    if isinstance(planted, IndexList) and len(planted.ids) >= len(greedy.ids):
        return planted, len(planted.ids)
    return greedy, len(greedy.ids)


# --- Maximum Independent Set ---

MIS_TIERS = {
    Difficulty.EASY: {"vertices": (12, 20), "independent": (4, 8)},
    Difficulty.MEDIUM: {"vertices": (20, 30), "independent": (8, 12)},
    Difficulty.HARD: {"vertices": (30, 40), "independent": (12, 16)},
    Difficulty.BENCHMARK: {"vertices": (40, 50), "independent": (16, 20)},
}


def gen_mis(row: dict, rng: SplitMix64) -> tuple[UndirectedGraph, Solution]:
    while True:
        n = rng.randint(*row["vertices"])
        k = rng.randint(*row["independent"])
        if k <= n:
            break
    background = row.get("background", BACKGROUND_EDGE_PROB)
    planted = sorted(rng.sample(range(n), k))
    in_planted = set(planted)
    edges = []
    for u, v in combinations(range(n), 2):
        if u in in_planted and v in in_planted:
            continue  # never connect two planted vertices
        if rng.random() < background:
            edges.append((u, v))
    return graph_from_edges(n, edges), IndexList(tuple(planted))


def verify_mis(payload: UndirectedGraph, sol: IndexList) -> VerifyResult:
    violations = _check_vertex_ids(payload, sol.ids)
    if violations:
        return infeasible(violations)
    nbrs = payload.neighbor_sets()
    for u, v in combinations(sol.ids, 2):
        if v in nbrs[u]:
            return infeasible([("adjacent",
                                f"vertices {u} and {v} are adjacent")])
    return feasible(len(sol.ids))


def solve_mis(payload: UndirectedGraph, planted: Solution,
              rng: SplitMix64) -> tuple[Solution, int]:
    """Better of the planted set and greedy min-degree elimination."""
    nbrs = payload.neighbor_sets()
    alive = set(range(payload.n))
    picked: list[int] = []
    while alive:
        v = min(alive, key=lambda u: (len(nbrs[u] & alive), u))
        picked.append(v)
        alive -= nbrs[v] | {v}
    greedy = IndexList(tuple(sorted(picked)))
    if isinstance(planted, IndexList) and len(planted.ids) >= len(greedy.ids):
        return planted, len(planted.ids)
    return greedy, len(greedy.ids)


def _check_vertex_ids(payload: UndirectedGraph, ids) -> list:
    violations = []
    seen = set()
    for v in ids:
        if v in seen:
            violations.append(("duplicate_id", f"vertex {v} appears twice"))
        seen.add(v)
        if not 0 <= v < payload.n:
            violations.append(("unknown_vertex", f"unknown vertex {v}"))
    return violations


# --- Graph Coloring ---

COLORING_TIERS = {
    Difficulty.EASY: {"vertices": (8, 12), "colors": (3, 4), "density": 0.2},
    Difficulty.MEDIUM: {"vertices": (15, 22), "colors": (4, 6), "density": 0.35},
    Difficulty.HARD: {"vertices": (25, 32), "colors": (6, 8), "density": 0.5},
    Difficulty.BENCHMARK: {"vertices": (32, 40), "colors": (6, 8), "density": 0.5},
}


def gen_coloring(row: dict, rng: SplitMix64) -> tuple[UndirectedGraph, Solution]:
    while True:
        n = rng.randint(*row["vertices"])
        k = rng.randint(*row["colors"])
        if k <= n:
            break
    density = row["density"]
    perm = list(range(n))
    rng.shuffle(perm)
    color_of = {}
    for i, v in enumerate(perm):
        color_of[v] = i if i < k else rng.randrange(k)  # first k seed classes
    edges = set()
    for u, v in combinations(range(n), 2):
        if color_of[u] != color_of[v] and rng.random() < density:
            edges.add((u, v))
    # every class pair gets at least one edge so k is not trivially loose
    classes = [[v for v in range(n) if color_of[v] == c] for c in range(k)]
    for a, b in combinations(range(k), 2):
        if not any((min(u, v), max(u, v)) in edges
                   for u in classes[a] for v in classes[b]):
            u = rng.choice(classes[a])
            v = rng.choice(classes[b])
            edges.add((min(u, v), max(u, v)))
    planted = ColorVector(tuple(color_of[v] + 1 for v in range(n)))
    return graph_from_edges(n, edges), planted


def verify_coloring(payload: UndirectedGraph, sol: ColorVector) -> VerifyResult:
    if len(sol.colors) != payload.n:
        return infeasible([("color_vector_length",
                            f"expected {payload.n} colors, got {len(sol.colors)}")])
    bad = [c for c in sol.colors if c < 1]
    if bad:
        return infeasible([("color_not_positive",
                            f"colors must be positive integers, got {bad[0]}")])
    for u in range(payload.n):
        for v in payload.adjacency[u]:
            if u < v and sol.colors[u] == sol.colors[v]:
                return infeasible([("adjacent_same_color",
                                    f"edge {u}-{v} endpoints share color "
                                    f"{sol.colors[u]}")])
    return feasible(len(set(sol.colors)))


def dsatur_coloring(graph: UndirectedGraph) -> ColorVector:
    """DSATUR greedy: highest saturation, then highest degree, then lowest id."""
    nbrs = graph.neighbor_sets()
    degree = [len(nbrs[v]) for v in range(graph.n)]
    neighbor_colors: list[set[int]] = [set() for _ in range(graph.n)]
    colors: dict[int, int] = {}
    for _ in range(graph.n):
        v = max((u for u in range(graph.n) if u not in colors),
                key=lambda u: (len(neighbor_colors[u]), degree[u], -u))
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in nbrs[v]:
            if u not in colors:
                neighbor_colors[u].add(c)
    return ColorVector(tuple(colors[v] for v in range(graph.n)))


def solve_coloring(payload: UndirectedGraph, planted: Solution,
                   rng: SplitMix64) -> tuple[Solution, int]:
    """Better of the planted coloring and DSATUR (colorings are feasible both)."""
    greedy = dsatur_coloring(payload)
    greedy_k = len(set(greedy.colors))
    if isinstance(planted, ColorVector):
        planted_k = len(set(planted.colors))
        if planted_k <= greedy_k:
            return planted, planted_k
    return greedy, greedy_k


def coloring_prompt(p: UndirectedGraph) -> str:
    adj = ", ".join(f"{v}: [{', '.join(map(str, p.adjacency[v]))}]"
                    for v in range(p.n))
    return (
        f"Graph coloring. The graph has {p.n} vertices with adjacency lists "
        f"{{{adj}}}. Assign each vertex a positive integer color so that no "
        "two adjacent vertices share a color, using as few distinct colors "
        "as possible."
    )


def clique_prompt(p: UndirectedGraph) -> str:
    adj = ", ".join(f"{v}: [{', '.join(map(str, p.adjacency[v]))}]"
                    for v in range(p.n))
    return (
        f"Maximum clique. The undirected graph has {p.n} vertices with "
        f"adjacency lists {{{adj}}}. Find the largest set of vertices in "
        "which every pair is connected by an edge."
    )


def mis_prompt(p: UndirectedGraph) -> str:
    adj = ", ".join(f"{v}: [{', '.join(map(str, p.adjacency[v]))}]"
                    for v in range(p.n))
    return (
        f"Maximum independent set. The undirected graph has {p.n} vertices "
        f"with adjacency lists {{{adj}}}. Find the largest set of vertices "
        "in which no two are connected by an edge."
    )
