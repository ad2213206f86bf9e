"""Answer grammars: the exact surface syntax each task accepts.

Parsing is whitespace-insensitive but otherwise strict: an integer list is
``[i0, i1, ...]``, a bisection is two nested lists, a schedule is a list
of ``(meeting, room, start)`` triples, and set cover additionally accepts
the bare token ``Impossible`` (case-sensitive).
"""
from __future__ import annotations

import re
from typing import Callable, Optional

from .types import (ColorVector, Impossible, IndexList, PartitionPair, Route,
                    Schedule, Solution)

_INT = r"[+-]?\d+"
_INT_LIST_RE = re.compile(
    rf"^\s*\[\s*(?:{_INT}\s*(?:,\s*{_INT}\s*)*)?\]\s*$")
_PAIR_RE = re.compile(
    rf"^\s*\[\s*(\[\s*(?:{_INT}\s*(?:,\s*{_INT}\s*)*)?\])\s*,"
    rf"\s*(\[\s*(?:{_INT}\s*(?:,\s*{_INT}\s*)*)?\])\s*\]\s*$")
_TRIPLE_RE = re.compile(
    rf"^\s*\[\s*(?:\(\s*{_INT}\s*,\s*{_INT}\s*,\s*{_INT}\s*\)\s*"
    rf"(?:,\s*\(\s*{_INT}\s*,\s*{_INT}\s*,\s*{_INT}\s*\)\s*)*)?\]\s*$")
_INT_RE = re.compile(_INT)
IMPOSSIBLE_TOKEN = "Impossible"


def _ints(text: str) -> list[int]:
    return [int(tok) for tok in _INT_RE.findall(text)]


def parse_index_list(text: str) -> Optional[IndexList]:
    if not _INT_LIST_RE.match(text):
        return None
    return IndexList(tuple(_ints(text)))


def parse_route(text: str) -> Optional[Route]:
    if not _INT_LIST_RE.match(text):
        return None
    return Route(tuple(_ints(text)))


def parse_colors(text: str) -> Optional[ColorVector]:
    if not _INT_LIST_RE.match(text):
        return None
    return ColorVector(tuple(_ints(text)))


def parse_partition(text: str) -> Optional[PartitionPair]:
    m = _PAIR_RE.match(text)
    if not m:
        return None
    return PartitionPair(tuple(_ints(m.group(1))), tuple(_ints(m.group(2))))


def parse_schedule(text: str) -> Optional[Schedule]:
    if not _TRIPLE_RE.match(text):
        return None
    nums = _ints(text)
    entries = tuple((nums[i], nums[i + 1], nums[i + 2])
                    for i in range(0, len(nums), 3))
    return Schedule(entries)


def parse_impossible(text: str) -> Optional[Impossible]:
    return Impossible() if text.strip() == IMPOSSIBLE_TOKEN else None


# kind -> parser; "set_cover_answer" also admits the Impossible token.
_PARSERS: dict[str, tuple[Callable[[str], Optional[Solution]], ...]] = {
    "index_list": (parse_index_list,),
    "set_cover_answer": (parse_index_list, parse_impossible),
    "route": (parse_route,),
    "colors": (parse_colors,),
    "partition": (parse_partition,),
    "schedule": (parse_schedule,),
}


def parse_answer(text: str, kind: str) -> Optional[Solution]:
    for parser in _PARSERS[kind]:
        sol = parser(text)
        if sol is not None:
            return sol
    return None


def accepts_impossible(kind: str) -> bool:
    return kind == "set_cover_answer"


def format_solution(sol: Solution) -> str:
    """Render a solution in its answer-grammar surface syntax."""
    if isinstance(sol, IndexList):
        return "[" + ", ".join(str(i) for i in sol.ids) + "]"
    if isinstance(sol, Route):
        return "[" + ", ".join(str(c) for c in sol.cities) + "]"
    if isinstance(sol, ColorVector):
        return "[" + ", ".join(str(c) for c in sol.colors) + "]"
    if isinstance(sol, PartitionPair):
        a = ", ".join(str(v) for v in sol.side_a)
        b = ", ".join(str(v) for v in sol.side_b)
        return f"[[{a}], [{b}]]"
    if isinstance(sol, Schedule):
        return "[" + ", ".join(f"({m}, {r}, {s})" for m, r, s in sol.entries) + "]"
    if isinstance(sol, Impossible):
        return IMPOSSIBLE_TOKEN
    raise TypeError(f"not a solution: {sol!r}")


def bracket_spans(text: str) -> list[tuple[int, int]]:
    """Every balanced [...] span, by start position (stack matching).

    Unbalanced brackets are dropped rather than swallowing the rest of
    the text, so a stray '[' in prose cannot hide a later answer.
    """
    spans = []
    stack: list[int] = []
    for i, ch in enumerate(text):
        if ch == "[":
            stack.append(i)
        elif ch == "]" and stack:
            spans.append((stack.pop(), i + 1))
    spans.sort()
    return spans


def last_parseable_answer(text: str, kind: str) -> Optional[tuple[str, Solution]]:
    """The last substring of ``text`` that parses under the grammar.

    Candidates are the top-level bracket spans plus, for set cover, every
    standalone ``Impossible`` token; the right-most parseable one wins.
    """
    candidates: list[tuple[int, str]] = [
        (a, text[a:b]) for a, b in bracket_spans(text)]
    if accepts_impossible(kind):
        for m in re.finditer(rf"\b{IMPOSSIBLE_TOKEN}\b", text):
            candidates.append((m.start(), m.group(0)))
    best: Optional[tuple[str, Solution]] = None
    for _, cand in sorted(candidates, key=lambda c: c[0]):
        sol = parse_answer(cand, kind)
        if sol is not None:
            best = (cand, sol)
    return best
