"""Small pools of feasible solutions per instance, for reward-shape tests."""
from optforge import TaskId, heuristic_solve, verify
from optforge.tasks import graphs
from optforge.types import (ColorVector, IndexList, PartitionPair, Route,
                            Schedule)


def feasible_solutions(inst):
    """A few structurally different feasible solutions for ``inst``."""
    pool = [inst.planted, heuristic_solve(inst)[0]]
    task = inst.task
    payload = inst.payload
    if task in (TaskId.MAX_CLIQUE, TaskId.MAX_INDEPENDENT_SET):
        pool.append(IndexList((inst.planted.ids[0],)))
        pool.append(IndexList(()))
    elif task is TaskId.KNAPSACK:
        pool.append(IndexList(()))
        for i, (w, _) in enumerate(payload.items):
            if w <= payload.capacity:
                pool.append(IndexList((i,)))
                break
    elif task is TaskId.SET_COVER:
        pool.append(IndexList(tuple(range(len(payload.subsets)))))
    elif task is TaskId.GRAPH_COLORING:
        pool.append(ColorVector(tuple(range(1, payload.n + 1))))
        pool.append(graphs.dsatur_coloring(payload))
    elif task is TaskId.TSP:
        cities = list(range(payload.n))
        pool.append(Route(tuple(cities + [0])))
        pool.append(Route(tuple(cities[::-1] + [payload.n - 1])))
    elif task is TaskId.HAMILTONIAN_CYCLE:
        nbrs = payload.graph.neighbor_sets()
        tri = next(
            ((u, v, w)
             for u in range(payload.graph.n)
             for v in sorted(nbrs[u]) if v > u
             for w in sorted(nbrs[v] & nbrs[u]) if w > v), None)
        if tri:
            pool.append(Route(tri))
    elif task is TaskId.BALANCED_BISECTION:
        flipped = PartitionPair(inst.planted.side_b, inst.planted.side_a)
        pool.append(flipped)
        n = payload.n
        half = (n + 1) // 2
        pool.append(PartitionPair(tuple(range(half)), tuple(range(half, n))))
    elif task is TaskId.MEETING_SCHEDULING:
        pool.append(Schedule(()))
        pool.append(Schedule(inst.planted.entries[:1]))
    out = []
    seen = set()
    for sol in pool:
        if sol in seen:
            continue
        seen.add(sol)
        verdict = verify(inst, sol)
        if verdict.feasible:
            out.append((sol, verdict.objective))
    return out
