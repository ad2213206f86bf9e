"""Meeting Scheduling: feasible-schedule-first generation and verification.

Time is an abstract integer-minute axis; all intervals are half-open, so
a meeting ending at t and another starting at t never conflict. The
generator lays out a conflict-free schedule on a 15-minute grid inside
the working window, derives availabilities from the committed slots plus
padding, and punches fragmentation holes away from committed slots.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..canonical import int_key_map, parse_int_key_map
from ..rng import SplitMix64
from ..types import (Difficulty, Schedule, Solution, VerifyResult, feasible,
                     infeasible)

WORK_WINDOW = (540, 1020)  # 9:00-17:00 in minutes
GRID = 15
DURATIONS = (30, 45, 60, 90)


@dataclass(frozen=True)
class MspPayload:
    # meeting id -> (attendee ids ascending, duration minutes)
    meetings: tuple[tuple[tuple[int, ...], int], ...]
    # attendee id -> disjoint (start, end) intervals ascending
    availability: tuple[tuple[tuple[int, int], ...], ...]
    rooms: tuple[int, ...]  # room id -> capacity


MSP_TIERS = {
    Difficulty.EASY: {"meetings": (4, 5), "attendees": (3, 5), "rooms": (3, 4),
                      "max_per_meeting": 3, "holes": (0, 1)},
    Difficulty.MEDIUM: {"meetings": (5, 6), "attendees": (4, 6), "rooms": (4, 5),
                        "max_per_meeting": 4, "holes": (1, 2)},
    Difficulty.HARD: {"meetings": (6, 7), "attendees": (5, 7), "rooms": (5, 6),
                      "max_per_meeting": 4, "holes": (1, 3)},
    Difficulty.BENCHMARK: {"meetings": (8, 10), "attendees": (7, 9),
                           "rooms": (6, 7), "max_per_meeting": 5,
                           "holes": (2, 3)},
}


def _overlaps(a_start, a_end, b_start, b_end) -> bool:
    return a_start < b_end and b_start < a_end


def _free(busy: list[tuple[int, int]], start: int, end: int) -> bool:
    return not any(_overlaps(start, end, s, e) for s, e in busy)


def _merge(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    merged: list[list[int]] = []
    for s, e in sorted(intervals):
        if merged and s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    return [(s, e) for s, e in merged]


def gen_msp(row: dict, rng: SplitMix64) -> tuple[MspPayload, Solution]:
    lo, hi = WORK_WINDOW
    for _ in range(200):
        m_count = rng.randint(*row["meetings"])
        a_count = rng.randint(*row["attendees"])
        r_count = rng.randint(*row["rooms"])
        meetings = []
        for _ in range(m_count):
            size = rng.randint(1, min(row["max_per_meeting"], a_count))
            attendees = tuple(sorted(rng.sample(range(a_count), size)))
            meetings.append((attendees, rng.choice(DURATIONS)))
        room_busy: list[list[tuple[int, int]]] = [[] for _ in range(r_count)]
        att_busy: list[list[tuple[int, int]]] = [[] for _ in range(a_count)]
        entries = []
        placed_all = True
        order = list(range(m_count))
        rng.shuffle(order)
        for i in order:
            attendees, duration = meetings[i]
            slots = [
                (s, r)
                for s in range(lo, hi - duration + 1, GRID)
                for r in range(r_count)
                if _free(room_busy[r], s, s + duration)
                and all(_free(att_busy[a], s, s + duration) for a in attendees)
            ]
            if not slots:
                placed_all = False
                break
            s, r = rng.choice(slots)
            entries.append((i, r, s))
            room_busy[r].append((s, s + duration))
            for a in attendees:
                att_busy[a].append((s, s + duration))
        if placed_all:
            break
    assert placed_all, "could not lay out a feasible schedule"
    capacities = []
    for r in range(r_count):
        sizes = [len(meetings[i][0]) for i, rr, _ in entries if rr == r]
        if sizes:
            capacities.append(max(sizes) + rng.randint(0, 2))
        else:
            capacities.append(rng.randint(1, row["max_per_meeting"]))
    availability = []
    for a in range(a_count):
        committed = sorted(att_busy[a])
        padded = [(max(lo, s - GRID * rng.randint(0, 4)),
                   min(hi, e + GRID * rng.randint(0, 4)))
                  for s, e in committed]
        if not padded or rng.random() < 0.5:
            # some free time unrelated to any meeting
            start = rng.randint(0, (hi - lo - 60) // GRID) * GRID + lo
            padded.append((start, min(hi, start + rng.choice((60, 120)))))
        merged = _merge(padded)
        for _ in range(rng.randint(*row["holes"])):
            merged = _punch_hole(merged, committed, rng)
        availability.append(tuple(merged))
    payload = MspPayload(tuple(meetings), tuple(availability),
                         tuple(capacities))
    planted = Schedule(tuple(sorted(entries, key=lambda e: (e[2], e[0]))))
    return payload, planted


def _punch_hole(intervals: list[tuple[int, int]],
                committed: list[tuple[int, int]],
                rng: SplitMix64) -> list[tuple[int, int]]:
    """Remove one grid-aligned hole that avoids all committed slots."""
    candidates = []
    for s, e in intervals:
        for hole_len in (30, 45, 60):
            for start in range(s, e - hole_len + 1, GRID):
                hole = (start, start + hole_len)
                if not any(_overlaps(*hole, cs, ce) for cs, ce in committed):
                    candidates.append((s, e, hole))
    if not candidates:
        return intervals
    s, e, (hs, he) = rng.choice(candidates)
    out = [iv for iv in intervals if iv != (s, e)]
    if hs > s:
        out.append((s, hs))
    if he < e:
        out.append((he, e))
    return sorted(out)


def verify_msp(payload: MspPayload, sol: Schedule) -> VerifyResult:
    violations = []
    starts = [s for _, _, s in sol.entries]
    if starts != sorted(starts):
        violations.append(("unsorted", "entries must ascend by start time"))
    seen_meetings = set()
    spans = []  # (meeting, room, start, end, attendees)
    for meeting, room, start in sol.entries:
        if meeting in seen_meetings:
            violations.append(("duplicate_meeting",
                               f"meeting {meeting} scheduled twice"))
            continue
        seen_meetings.add(meeting)
        if not 0 <= meeting < len(payload.meetings):
            violations.append(("unknown_meeting", f"unknown meeting {meeting}"))
            continue
        if not 0 <= room < len(payload.rooms):
            violations.append(("unknown_room", f"unknown room {room}"))
            continue
        attendees, duration = payload.meetings[meeting]
        end = start + duration
        for a in attendees:
            if not any(s <= start and end <= e
                       for s, e in payload.availability[a]):
                violations.append(
                    ("availability_gap",
                     f"attendee {a} unavailable for meeting {meeting} "
                     f"over [{start}, {end})"))
        if payload.rooms[room] < len(attendees):
            violations.append(
                ("capacity_exceeded",
                 f"room {room} holds {payload.rooms[room]} < "
                 f"{len(attendees)} attendees of meeting {meeting}"))
        spans.append((meeting, room, start, end, attendees))
    for i in range(len(spans)):
        for j in range(i + 1, len(spans)):
            m1, r1, s1, e1, a1 = spans[i]
            m2, r2, s2, e2, a2 = spans[j]
            if not _overlaps(s1, e1, s2, e2):
                continue
            if r1 == r2:
                violations.append(("room_overlap",
                                   f"room {r1} hosts meetings {m1} and {m2} "
                                   "at overlapping times"))
            shared = set(a1) & set(a2)
            if shared:
                violations.append(("attendee_overlap",
                                   f"attendee {min(shared)} is in meetings "
                                   f"{m1} and {m2} at overlapping times"))
    if violations:
        return infeasible(violations)
    participation = sum(len(payload.meetings[m][0])
                        for m, _, _ in sol.entries)
    return feasible(participation)


def solve_msp(payload: MspPayload, planted: Solution,
              rng: SplitMix64) -> tuple[Solution, int]:
    """Greedy placement by attendee count; falls back to the planted schedule.

    Meetings are tried in descending attendee-count order (ties: lower id).
    Candidate starts are every availability-interval start plus the end of
    each already-placed meeting, ascending; rooms are tried by id; the
    first conflict-free feasible slot wins.
    """
    meetings = payload.meetings
    order = sorted(range(len(meetings)), key=lambda i: (-len(meetings[i][0]), i))
    room_busy: list[list[tuple[int, int]]] = [[] for _ in payload.rooms]
    att_busy: list[list[tuple[int, int]]] = [[] for _ in payload.availability]
    placed: list[tuple[int, int, int]] = []
    avail_starts = sorted({s for ivs in payload.availability for s, _ in ivs})
    for i in order:
        attendees, duration = meetings[i]
        if any(payload.rooms[r] >= len(attendees)
               for r in range(len(payload.rooms))):
            candidates = sorted(set(avail_starts)
                                | {e for busy in att_busy for _, e in busy}
                                | {e for busy in room_busy for _, e in busy})
            spot = None
            for start in candidates:
                end = start + duration
                if not all(any(s <= start and end <= e
                               for s, e in payload.availability[a])
                           for a in attendees):
                    continue
                if not all(_free(att_busy[a], start, end) for a in attendees):
                    continue
                for r in range(len(payload.rooms)):
                    if payload.rooms[r] >= len(attendees) \
                            and _free(room_busy[r], start, end):
                        spot = (start, r)
                        break
                if spot:
                    break
            if spot:
                start, r = spot
                placed.append((i, r, start))
                room_busy[r].append((start, start + duration))
                for a in attendees:
                    att_busy[a].append((start, start + duration))
    greedy = Schedule(tuple(sorted(placed, key=lambda e: (e[2], e[0]))))
    greedy_obj = sum(len(meetings[m][0]) for m, _, _ in greedy.entries)
    assert isinstance(planted, Schedule)
    planted_obj = sum(len(meetings[m][0]) for m, _, _ in planted.entries)
    if planted_obj >= greedy_obj:
        return planted, planted_obj
    return greedy, greedy_obj


# --- payload codec and prompt ---

def msp_payload_to_json(p: MspPayload) -> dict:
    meetings = {i: {"attendees": list(att), "duration": dur}
                for i, (att, dur) in enumerate(p.meetings)}
    availability = {a: [list(iv) for iv in ivs]
                    for a, ivs in enumerate(p.availability)}
    rooms = dict(enumerate(p.rooms))
    return {"meetings": int_key_map(meetings),
            "availability": int_key_map(availability),
            "rooms": int_key_map(rooms)}


def msp_payload_from_json(obj: dict) -> MspPayload:
    raw_m = parse_int_key_map(obj["meetings"])
    meetings = tuple(
        (tuple(int(a) for a in raw_m[i]["attendees"]), int(raw_m[i]["duration"]))
        for i in range(len(raw_m)))
    raw_a = parse_int_key_map(obj["availability"])
    availability = tuple(
        tuple((int(s), int(e)) for s, e in raw_a[a]) for a in range(len(raw_a)))
    for ivs in availability:
        for k, (s, e) in enumerate(ivs):
            assert s < e, "empty availability interval"
            assert k == 0 or ivs[k - 1][1] <= s, "overlapping intervals"
    raw_r = parse_int_key_map(obj["rooms"])
    rooms = tuple(int(raw_r[r]) for r in range(len(raw_r)))
    return MspPayload(meetings, availability, rooms)


def msp_prompt(p: MspPayload) -> str:
    meetings = ", ".join(
        f"{i}: ([{', '.join(map(str, att))}], {dur})"
        for i, (att, dur) in enumerate(p.meetings))
    avail = ", ".join(
        f"{a}: [{', '.join(f'({s}, {e})' for s, e in ivs)}]"
        for a, ivs in enumerate(p.availability))
    rooms = ", ".join(f"{r}: {c}" for r, c in enumerate(p.rooms))
    return (
        "Meeting scheduling. Meetings are given as id: (attendee ids, "
        f"duration in minutes): {{{meetings}}}. Attendee availability "
        f"windows (start, end): {{{avail}}}. Room capacities: {{{rooms}}}. "
        "Schedule meetings into rooms and start times so that every "
        "required attendee is available for the whole meeting, room "
        "capacity is respected, and no attendee or room has overlapping "
        "meetings (a meeting ending at time t does not conflict with one "
        "starting at t). Skip meetings that cannot fit. Maximize the total "
        "attendee participation of the scheduled meetings."
    )
