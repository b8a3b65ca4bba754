"""Min-load greedy for unit jobs whose allowed slots form an arbitrary set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, MutableMapping

from ..errors import NoFeasibleSlot


@dataclass(frozen=True)
class SlotJob:
    id: str
    slots: frozenset[int]


def greedy(jobs: Iterable[SlotJob], loads: MutableMapping[int, int] | None = None) -> dict[str, int]:
    """Place jobs in order on their least-loaded allowed slot, lowest index on ties."""
    loads = {} if loads is None else loads
    chosen = {}
    for job in jobs:
        if not job.slots:
            raise NoFeasibleSlot(f"job {job.id!r} has no allowed slot")
        slot = min(job.slots, key=lambda s: (loads.get(s, 0), s))
        loads[slot] = loads.get(slot, 0) + 1
        chosen[job.id] = slot
    return chosen


def slot_loads(assignment: dict[str, int]) -> dict[int, int]:
    loads: dict[int, int] = {}
    for slot in assignment.values():
        loads[slot] = loads.get(slot, 0) + 1
    return loads


def slot_cost(assignment: dict[str, int], alpha: float) -> float:
    return float(sum(v**alpha for v in slot_loads(assignment).values()))
