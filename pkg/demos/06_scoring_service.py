#!/usr/bin/env python3
"""The stateless scoring service that RL trainers batch against.

Boots the HTTP server on an ephemeral port, scores one completion by
inline instance record and one by instance_id lookup, then shuts down.
In production: ``optforge serve --port 8080 --corpus instances.jsonl``.
"""
import json
import tempfile
import threading
import urllib.request
from pathlib import Path

import optforge as of
from optforge.answers import format_solution
from optforge.service import make_server

with tempfile.TemporaryDirectory() as tmp:
    instances = [of.generate(of.TaskId.SUBSET_SUM, of.Difficulty.EASY, s)
                 for s in range(3)]
    corpus = Path(tmp) / "instances.jsonl"
    of.write_instances(corpus, instances)

    server = make_server(0, corpus)
    port = server.server_address[1]
    threading.Thread(target=server.serve_forever, daemon=True).start()
    base = f"http://127.0.0.1:{port}"
    print("service on", base)

    with urllib.request.urlopen(base + "/health") as resp:
        print("GET /health ->", resp.status, resp.read().decode())

    inst = instances[0]
    solution, _ = of.heuristic_solve(inst)
    body = {"instance_id": inst.instance_id,
            "completion": f"<think>dp</think>\n{format_solution(solution)}"}
    req = urllib.request.Request(base + "/score",
                                 data=json.dumps(body).encode(),
                                 method="POST")
    with urllib.request.urlopen(req) as resp:
        print("POST /score (by id) ->", resp.status,
              json.loads(resp.read()))

    body = {"instance": json.loads(of.encode_instance(instances[1])),
            "completion": "<think>way off</think>\n[0]"}
    req = urllib.request.Request(base + "/score",
                                 data=json.dumps(body).encode(),
                                 method="POST")
    with urllib.request.urlopen(req) as resp:
        print("POST /score (inline) ->", resp.status,
              json.loads(resp.read()))

    server.shutdown()
    server.server_close()
    print("done")
