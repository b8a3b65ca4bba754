"""Exhaustive search oracles, kept deliberately independent of the window DP."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..core import Instance, Schedule, schedule_cost
from ..errors import NoFeasibleSlot, TooLarge
from ..online.greedy import SlotJob, slot_cost

DEFAULT_CAP = 10**7


def search_space(instance: Instance) -> int:
    return math.prod(j.span - j.width + 1 for j in instance.jobs)


def brute_force(instance: Instance, cap: int = DEFAULT_CAP) -> tuple[Schedule, float]:
    """Minimum cost over every tuple of start times, jobs taken in id order.

    Depth-first in odometer order; a branch is cut once its partial cost reaches
    the incumbent, so the first optimum found (the lexicographically smallest)
    is kept.
    """
    size = search_space(instance)
    if size > cap:
        raise TooLarge(size, cap)
    jobs = sorted(instance.jobs, key=lambda j: j.id)
    alpha = instance.alpha
    loads = [0] * instance.horizon
    starts: list[int] = []
    best_cost = math.inf
    best: list[int] = []

    def place(k: int, partial: float) -> None:
        nonlocal best_cost, best
        if k == len(jobs):
            if partial < best_cost:
                best_cost, best = partial, list(starts)
            return
        job = jobs[k]
        for st in range(job.release, job.deadline - job.width + 1):
            extra = 0.0
            for t in range(st, st + job.width):
                extra += (loads[t] + job.height) ** alpha - loads[t] ** alpha
            if partial + extra >= best_cost:
                continue
            for t in range(st, st + job.width):
                loads[t] += job.height
            starts.append(st)
            place(k + 1, partial + extra)
            starts.pop()
            for t in range(st, st + job.width):
                loads[t] -= job.height

    place(0, 0.0)
    schedule = Schedule({j.id: s for j, s in zip(jobs, best)})
    return schedule, schedule_cost(instance, schedule)


def slot_brute_force(jobs: Sequence[SlotJob], alpha: float = 2, cap: int = DEFAULT_CAP) -> tuple[dict[str, int], float]:
    """Exhaustive optimum for unit jobs with arbitrary allowed-slot sets."""
    size = math.prod(len(j.slots) for j in jobs)
    if size > cap:
        raise TooLarge(size, cap)
    order = [sorted(j.slots) for j in jobs]
    loads: dict[int, int] = {}
    chosen: list[int] = []
    best_cost = math.inf
    best: list[int] = []

    def place(k: int, partial: float) -> None:
        nonlocal best_cost, best
        if k == len(jobs):
            if partial < best_cost:
                best_cost, best = partial, list(chosen)
            return
        for s in order[k]:
            cur = loads.get(s, 0)
            nxt = partial + (cur + 1) ** alpha - cur**alpha
            if nxt >= best_cost:
                continue
            loads[s] = cur + 1
            chosen.append(s)
            place(k + 1, nxt)
            chosen.pop()
            loads[s] = cur

    place(0, 0.0)
    assignment = {j.id: s for j, s in zip(jobs, best)}
    return assignment, slot_cost(assignment, alpha)


def slot_optimum(jobs: Sequence[SlotJob], alpha: float = 2) -> tuple[dict[str, int], float]:
    """Optimum for unit slot-set jobs when a one-job-per-slot placement exists.

    Every job adds at least 1 to the cost (integer loads and alpha > 1), so a
    perfect matching of jobs to distinct slots is optimal; otherwise fall back
    to exhaustive search.
    """
    if not jobs:
        return {}, 0.0
    slots = sorted(set().union(*(j.slots for j in jobs)))
    column = {s: k for k, s in enumerate(slots)}
    rows, cols = [], []
    for r, j in enumerate(jobs):
        if not j.slots:
            raise NoFeasibleSlot(f"job {j.id!r} has no allowed slot")
        cols.extend(column[s] for s in j.slots)
        rows.extend([r] * len(j.slots))
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(jobs), len(slots)))
    match = maximum_bipartite_matching(graph, perm_type="column")
    if (match >= 0).all():
        assignment = {j.id: slots[match[r]] for r, j in enumerate(jobs)}
        return assignment, slot_cost(assignment, alpha)
    return slot_brute_force(jobs, alpha)
