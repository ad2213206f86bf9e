"""Canonical text encoding: one stable byte representation per value.

Records are compact JSON with a fixed field order (insertion order is
preserved); integer-keyed maps are serialized with decimal-string keys in
ascending numeric order. Content digests are SHA-256 over the canonical
bytes.
"""
from __future__ import annotations

import hashlib
import json
from typing import Any, Mapping


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def int_key_map(pairs: Mapping[int, Any]) -> dict[str, Any]:
    """Render an int-keyed map with decimal-string keys, ascending."""
    return {str(k): pairs[k] for k in sorted(pairs)}


def parse_int_key_map(obj: Mapping[str, Any]) -> dict[int, Any]:
    return {int(k): v for k, v in obj.items()}


def sha256_hex(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()
