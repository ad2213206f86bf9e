"""Stateless HTTP scoring service.

POST /score accepts {"instance": <canonical record>, "completion": str}
or {"instance_id": str, "completion": str} resolved against a read-only
corpus loaded at startup (or named per request via "corpus"). GET
/health returns "ok". Every request is scored independently; the corpus
cache is immutable after load, so concurrent requests need no locks.
"""
from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .engine import read_instances, record_to_instance
from .reward import breakdown_to_json, score
from .types import Instance


class ScoreService:
    def __init__(self, corpus_path=None):
        self._corpora: dict[str, dict[str, Instance]] = {}
        self._default: dict[str, Instance] = {}
        if corpus_path:
            self._default = self._load(corpus_path)

    def _load(self, path) -> dict[str, Instance]:
        key = str(path)
        if key not in self._corpora:
            self._corpora[key] = {
                inst.instance_id: inst for inst in read_instances(path)}
        return self._corpora[key]

    def handle_score(self, body: dict) -> tuple[int, dict]:
        completion = body.get("completion")
        if not isinstance(completion, str):
            return 400, {"error": "completion must be a string"}
        if "instance" in body:
            try:
                record = body["instance"]
                if isinstance(record, str):
                    record = json.loads(record)
                instance = record_to_instance(record)
            except Exception as exc:
                return 400, {"error": f"bad instance record: {exc}"}
        elif "instance_id" in body:
            cache = self._default
            if "corpus" in body:
                try:
                    cache = self._load(body["corpus"])
                except OSError as exc:
                    return 400, {"error": f"cannot read corpus: {exc}"}
                except ValueError as exc:
                    return 400, {"error": f"bad corpus: {exc}"}
            instance = cache.get(body["instance_id"])
            if instance is None:
                return 404, {"error": f"unknown instance_id "
                                      f"{body['instance_id']!r}"}
        else:
            return 400, {"error": "request needs 'instance' or 'instance_id'"}
        breakdown = score(instance, completion)
        return 200, breakdown_to_json(instance.instance_id, breakdown)


def make_server(port: int, corpus_path=None) -> ThreadingHTTPServer:
    service = ScoreService(corpus_path)

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, payload):
            data = json.dumps(payload).encode("utf-8") \
                if not isinstance(payload, bytes) else payload
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def do_GET(self):
            if self.path == "/health":
                self._send(200, b'"ok"')
            else:
                self._send(404, {"error": "not found"})

        def do_POST(self):
            if self.path != "/score":
                self._send(404, {"error": "not found"})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                body = json.loads(self.rfile.read(length).decode("utf-8"))
                if not isinstance(body, dict):
                    raise ValueError("body must be a JSON object")
            except Exception as exc:
                self._send(400, {"error": f"malformed body: {exc}"})
                return
            status, payload = service.handle_score(body)
            self._send(status, payload)

    return ThreadingHTTPServer(("127.0.0.1", port), Handler)


def serve(port: int, corpus_path=None) -> None:
    server = make_server(port, corpus_path)
    try:
        server.serve_forever()
    finally:
        server.server_close()
