"""Cutting the time axis into DP windows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import Instance, Job
from ..errors import EmptyInstance


@dataclass(frozen=True)
class WindowDecomposition:
    boundaries: tuple[int, ...]
    clique_jobs: tuple[tuple[str, ...], ...]

    @property
    def windows(self) -> list[tuple[int, int]]:
        b = self.boundaries
        return list(zip(b, b[1:]))

    def __len__(self) -> int:
        return len(self.boundaries) - 1


def meets(job: Job, lo: int, hi: int) -> bool:
    return job.release < hi and job.deadline > lo


def alive_at(jobs: Iterable[Job], t: int) -> frozenset[str]:
    return frozenset(j.id for j in jobs if j.release <= t < j.deadline)


def max_overlap(jobs: Sequence[Job]) -> int:
    return max((len(alive_at(jobs, j.release)) for j in jobs), default=0)


def maximal_cliques(jobs: Sequence[Job]) -> list[frozenset[str]]:
    """Maximal cliques of the interval graph, left to right.

    Each maximal clique is the set of windows alive just after some release, so
    sweeping the release times and discarding dominated sets finds them all.
    """
    candidates: list[frozenset[str]] = []
    for t in sorted({j.release for j in jobs}):
        alive = alive_at(jobs, t)
        if alive not in candidates:
            candidates.append(alive)
    return [c for c in candidates if not any(c < other for other in candidates)]


def from_boundaries(jobs: Sequence[Job], boundaries: Sequence[int]) -> WindowDecomposition:
    members = tuple(
        tuple(j.id for j in jobs if meets(j, lo, hi)) for lo, hi in zip(boundaries, boundaries[1:])
    )
    return WindowDecomposition(tuple(boundaries), members)


def window_decomposition_e(instance: Instance) -> WindowDecomposition:
    jobs = instance.jobs
    if not jobs:
        raise EmptyInstance("no jobs to decompose")
    by_id = {j.id: j for j in jobs}
    seen: set[str] = set()
    boundaries = []
    for clique in maximal_cliques(jobs):
        fresh = clique - seen
        seen |= clique
        boundaries.append(min(by_id[i].release for i in fresh))
    boundaries.append(max(j.deadline for j in jobs))
    return from_boundaries(jobs, boundaries)


def window_decomposition_eplus(instance: Instance) -> WindowDecomposition:
    jobs = instance.jobs
    if not jobs:
        raise EmptyInstance("no jobs to decompose")
    points = sorted({j.release for j in jobs} | {j.deadline for j in jobs})
    return from_boundaries(jobs, points)


def pair_windows(instance: Instance) -> WindowDecomposition:
    """Fixed windows of length two from 0 to the horizon rounded up to even."""
    jobs = instance.jobs
    if not jobs:
        raise EmptyInstance("no jobs to decompose")
    end = instance.horizon + instance.horizon % 2
    return from_boundaries(jobs, list(range(0, end + 1, 2)))
