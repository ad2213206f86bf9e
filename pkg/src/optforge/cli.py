"""Command-line front door.

Subcommands: generate, verify, solve, score, bench, emit, serve. All
batch outputs are written with write-then-rename, so a crash never
leaves a partial file. Exit codes: 0 success, 2 usage or malformed
input, 3 I/O failure. FORGE_SEED provides the default --seed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import answers, bench, curriculum, service
from .canonical import canonical_json, sha256_hex
from .engine import (generate, heuristic_solve, prompt_view,
                     read_instances, verify, write_instances)
from .ioutil import atomic_write_text
from .reward import breakdown_to_json, score
from .types import Difficulty, TaskId

EXIT_USAGE = 2
EXIT_IO = 3


class InputDataError(Exception):
    """Malformed input file contents (reported with line numbers)."""


def _default_seed() -> int:
    return int(os.environ.get("FORGE_SEED", "0"))


def _read_jsonl(path, required_keys):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputDataError(f"{path}:{lineno}: invalid JSON: {exc}")
            missing = [k for k in required_keys if k not in obj]
            if missing:
                raise InputDataError(
                    f"{path}:{lineno}: missing key(s) {', '.join(missing)}")
            rows.append(obj)
    return rows


def cmd_generate(args) -> int:
    task = TaskId(args.task)
    difficulty = Difficulty(args.difficulty)
    instances = [generate(task, difficulty, seed)
                 for seed in range(args.seed, args.seed + args.count)]
    if args.view == "full":
        digest = write_instances(args.out, instances)
    else:
        text = "".join(canonical_json(prompt_view(inst)) + "\n"
                       for inst in instances)
        atomic_write_text(args.out, text)
        digest = sha256_hex(text)
    print(f"wrote {len(instances)} instances to {args.out}")
    print(f"digest {digest}")
    return 0


def cmd_verify(args) -> int:
    instances = {i.instance_id: i for i in read_instances(args.instances)}
    rows = _read_jsonl(args.solutions, ("instance_id", "answer"))
    out_lines = []
    feasible_count = 0
    for row in rows:
        inst = instances.get(row["instance_id"])
        if inst is None:
            raise InputDataError(f"unknown instance_id {row['instance_id']!r}")
        kind = _answer_kind(inst)
        sol = answers.parse_answer(row["answer"], kind)
        if sol is None:
            result = {"instance_id": inst.instance_id, "feasible": False,
                      "objective": None,
                      "violations": [["unparseable", "answer does not match "
                                                     "the task grammar"]]}
        else:
            verdict = verify(inst, sol)
            feasible_count += verdict.feasible
            result = {"instance_id": inst.instance_id,
                      "feasible": verdict.feasible,
                      "objective": verdict.objective,
                      "violations": [list(v) for v in verdict.violations]}
        out_lines.append(canonical_json(result))
    text = "".join(l + "\n" for l in out_lines)
    if args.out:
        atomic_write_text(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"feasible {feasible_count}/{len(rows)}", file=sys.stderr)
    return 0


def _answer_kind(inst) -> str:
    from .registry import task_def
    return task_def(inst.task).answer_kind


def cmd_solve(args) -> int:
    instances = read_instances(args.instances)
    lines = []
    for inst in instances:
        solution, objective = heuristic_solve(inst)
        lines.append(canonical_json({
            "instance_id": inst.instance_id,
            "answer": answers.format_solution(solution),
            "objective": objective,
        }))
    atomic_write_text(args.out, "".join(l + "\n" for l in lines))
    print(f"solved {len(instances)} instances -> {args.out}")
    return 0


def cmd_score(args) -> int:
    instances = {i.instance_id: i for i in read_instances(args.instances)}
    rows = _read_jsonl(args.completions, ("instance_id", "completion"))
    lines = []
    totals = []
    for row in rows:
        inst = instances.get(row["instance_id"])
        if inst is None:
            raise InputDataError(f"unknown instance_id {row['instance_id']!r}")
        breakdown = score(inst, row["completion"])
        totals.append(breakdown.total)
        lines.append(canonical_json(
            breakdown_to_json(inst.instance_id, breakdown)))
    atomic_write_text(args.out, "".join(l + "\n" for l in lines))
    mean = sum(totals, Fraction(0)) / len(totals) if totals else Fraction(0)
    print(f"scored {len(rows)} completions -> {args.out}")
    print(f"mean total {float(mean):.4f}")
    return 0


def cmd_bench(args) -> int:
    if args.build_corpus:
        instances = bench.build_benchmark(args.seed)
        digest = write_instances(args.build_corpus, instances)
        print(f"wrote benchmark corpus ({len(instances)} instances) "
              f"to {args.build_corpus}")
        print(f"digest {digest}")
        return 0
    if not args.corpus or not args.completions:
        print("bench: --corpus and --completions are required "
              "(or use --build-corpus)", file=sys.stderr)
        return EXIT_USAGE
    instances = read_instances(args.corpus)
    rows = _read_jsonl(args.completions, ("instance_id", "completion"))
    completions = {r["instance_id"]: r["completion"] for r in rows}
    report = bench.evaluate(instances, completions)
    for unknown in report.unknown_ids:
        print(f"warning: completion for unknown instance {unknown}",
              file=sys.stderr)
    print(bench.render_report(report))
    if args.out:
        atomic_write_text(args.out, bench.report_json_text(report) + "\n")
        print(f"report -> {args.out}")
    return 0


def cmd_emit(args) -> int:
    with open(args.plan_config, "r", encoding="utf-8") as fh:
        try:
            config = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputDataError(f"{args.plan_config}: invalid JSON: {exc}")
    tasks = config.get("tasks")
    plan = curriculum.plan_curriculum(
        tasks=[TaskId(t) for t in tasks] if tasks else None,
        stages=config.get("stages", curriculum.DEFAULT_STAGES),
        per_stage_total=config.get("per_stage_total",
                                   curriculum.DEFAULT_PER_STAGE),
        proportions=tuple(config.get("proportions",
                                     curriculum.DEFAULT_PROPORTIONS)),
        base_seed=config.get("base_seed", _default_seed()),
    )
    manifest = curriculum.emit_corpus(
        plan, args.out,
        sidecar_path=args.sidecar,
        manifest_path=args.manifest,
        instances_path=args.instances,
        workers=args.workers,
    )
    print(f"emitted {len(manifest.rows)} records -> {args.out}")
    print(f"digest {manifest.digest}")
    return 0


def cmd_serve(args) -> int:
    server = service.make_server(args.port, args.corpus)
    host, port = server.server_address
    # flush so supervising processes see the bound port immediately
    print(f"scoring service on http://{host}:{port} "
          f"(POST /score, GET /health)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optforge",
        description="NP-hard optimization data engine: generate instances, "
                    "verify and solve them, score completions, emit training "
                    "corpora and run the benchmark.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate instances")
    p.add_argument("--task", required=True, choices=[t.value for t in TaskId])
    p.add_argument("--difficulty", required=True,
                   choices=[d.value for d in Difficulty])
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", required=True)
    p.add_argument("--view", choices=("full", "prompt"), default="full",
                   help="full canonical records or the prompt view")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="verify candidate answers")
    p.add_argument("--instances", required=True)
    p.add_argument("--solutions", required=True,
                   help="JSONL of {instance_id, answer}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="run the heuristic baselines")
    p.add_argument("--instances", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("score", help="score model completions")
    p.add_argument("--instances", required=True)
    p.add_argument("--completions", required=True,
                   help="JSONL of {instance_id, completion}")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("bench", help="build or evaluate the benchmark")
    p.add_argument("--corpus")
    p.add_argument("--completions")
    p.add_argument("--out")
    p.add_argument("--build-corpus", metavar="PATH",
                   help="write the 1,000-instance benchmark corpus and exit")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("emit", help="emit a curriculum training corpus")
    p.add_argument("--plan-config", required=True,
                   help="JSON plan: tasks/stages/per_stage_total/"
                        "proportions/base_seed")
    p.add_argument("--out", required=True)
    p.add_argument("--sidecar")
    p.add_argument("--manifest")
    p.add_argument("--instances",
                   help="also write canonical instance records here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("serve", help="run the stateless scoring service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--corpus", help="canonical instances for instance_id lookups")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
