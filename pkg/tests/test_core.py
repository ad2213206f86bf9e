"""Core contracts: dispatch, determinism, serialization round-trips."""
import json

import pytest

import optforge as of
from optforge.canonical import canonical_json
from optforge.engine import instance_to_record

ALL_TASKS = list(of.all_tasks())
ALL_TIERS = list(of.Difficulty)


def test_task_enum_shape():
    assert len(of.TaskId) == 10
    by_cat = {}
    for task in of.TaskId:
        by_cat.setdefault(task.category, []).append(task)
    assert len(by_cat[of.Category.GRAPH]) == 3
    assert len(by_cat[of.Category.SELECTION]) == 3
    assert len(by_cat[of.Category.PLANNING]) == 2
    assert len(by_cat[of.Category.PARTITION]) == 1
    assert len(by_cat[of.Category.SCHEDULE]) == 1
    for task in (of.TaskId.TSP, of.TaskId.GRAPH_COLORING, of.TaskId.SET_COVER,
                 of.TaskId.BALANCED_BISECTION):
        assert task.sense is of.Sense.MINIMIZE
    for task in (of.TaskId.HAMILTONIAN_CYCLE, of.TaskId.MAX_CLIQUE,
                 of.TaskId.MAX_INDEPENDENT_SET, of.TaskId.SUBSET_SUM,
                 of.TaskId.KNAPSACK, of.TaskId.MEETING_SCHEDULING):
        assert task.sense is of.Sense.MAXIMIZE


def test_difficulty_total_order():
    d = of.Difficulty
    assert d.EASY < d.MEDIUM < d.HARD < d.BENCHMARK
    assert sorted([d.BENCHMARK, d.EASY, d.HARD, d.MEDIUM]) == \
        [d.EASY, d.MEDIUM, d.HARD, d.BENCHMARK]


@pytest.mark.parametrize("task", ALL_TASKS, ids=lambda t: t.value)
@pytest.mark.parametrize("tier", ALL_TIERS, ids=lambda d: d.value)
def test_generate_contract(task, tier):
    for seed in range(5):
        inst = of.generate(task, tier, seed)
        assert inst.task is task and inst.difficulty is tier
        assert inst.seed == seed
        assert inst.generator_version == of.GENERATOR_VERSION
        verdict = of.verify(inst, inst.planted)
        assert verdict.feasible, verdict.violations
        assert inst.heuristic_objective > 0
        solution, objective = of.heuristic_solve(inst)
        assert objective == inst.heuristic_objective
        assert of.verify(inst, solution).objective == objective


@pytest.mark.parametrize("task", ALL_TASKS, ids=lambda t: t.value)
def test_seed_determinism(task):
    a = of.encode_instance(of.generate(task, of.Difficulty.MEDIUM, 99))
    b = of.encode_instance(of.generate(task, of.Difficulty.MEDIUM, 99))
    assert a == b
    c = of.encode_instance(of.generate(task, of.Difficulty.MEDIUM, 100))
    assert a != c


@pytest.mark.parametrize("task", ALL_TASKS, ids=lambda t: t.value)
def test_serialization_round_trip(task):
    inst = of.generate(task, of.Difficulty.EASY, 3)
    line = of.encode_instance(inst)
    back = of.decode_instance(line)
    assert back == inst  # field-for-field (frozen dataclasses)
    assert of.encode_instance(back) == line


def test_record_field_order():
    inst = of.generate(of.TaskId.SUBSET_SUM, of.Difficulty.EASY, 0)
    record = json.loads(of.encode_instance(inst))
    assert list(record) == ["instance_id", "task", "difficulty", "seed",
                            "payload", "planted", "heuristic_objective",
                            "generator_version"]


def test_payload_int_keys_ascending():
    inst = of.generate(of.TaskId.TSP, of.Difficulty.EASY, 1)
    record = instance_to_record(inst)
    keys = list(record["payload"]["dist"])
    assert keys == [str(i) for i in range(inst.payload.n)]
    inner = list(record["payload"]["dist"]["0"])
    assert inner == sorted(inner, key=int)


def test_instance_id_is_content_digest():
    inst = of.generate(of.TaskId.KNAPSACK, of.Difficulty.EASY, 11)
    record = instance_to_record(inst)
    assert len(record["instance_id"]) == 64
    int(record["instance_id"], 16)  # hex digest
    tampered = dict(record)
    tampered["heuristic_objective"] = record["heuristic_objective"] + 1
    with pytest.raises(ValueError, match="instance_id mismatch"):
        of.decode_instance(canonical_json(tampered))


def test_decode_rejects_wrong_shape_candidate():
    inst = of.generate(of.TaskId.TSP, of.Difficulty.EASY, 0)
    with pytest.raises(of.WrongAnswerShapeError):
        of.verify(inst, of.IndexList((0, 1)))


def test_verify_is_pure():
    inst = of.generate(of.TaskId.MEETING_SCHEDULING, of.Difficulty.EASY, 4)
    results = {of.verify(inst, inst.planted) for _ in range(5)}
    assert len(results) == 1


def test_prompt_view_never_leaks_answers():
    from optforge.answers import format_solution
    for task in ALL_TASKS:
        inst = of.generate(task, of.Difficulty.MEDIUM, 8)
        view = of.prompt_view(inst)
        assert set(view) == {"instance_id", "prompt", "task", "difficulty",
                             "seed"}
        assert "planted" not in view["prompt"]
        statement = view["prompt"].split("\n\nThink step by step")[0]
        assert format_solution(inst.planted) not in statement
        assert "<think>" in view["prompt"]
