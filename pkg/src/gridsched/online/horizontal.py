"""Uniform-height algorithms that spread work horizontally: UU and the queue-based AD."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..core import Instance, Job, Schedule, ceil_div, is_agreeable
from ..errors import InputClassViolation, NotAgreeable
from .sim import OnlineContext, run_online

NEXT_FIT = "nextfit"
FIRST_FIT = "firstfit"


def uniform_height(jobs: Sequence[Job]) -> int | None:
    heights = {j.height for j in jobs}
    if len(heights) > 1:
        raise InputClassViolation(f"uniform height expected, found heights {sorted(heights)}")
    return next(iter(heights), None)


class UUPolicy:
    """Start ceil(avg(t)/h) jobs per slot, earliest deadline first."""

    def __init__(self) -> None:
        self.height: int | None = None
        self.released: list[Job] = []

    def decide(self, ctx: OnlineContext) -> list[str]:
        for job in ctx.arrivals:
            if job.width != 1:
                raise InputClassViolation(f"UU needs unit widths; job {job.id!r} has width {job.width}")
            if self.height is None:
                self.height = job.height
            elif job.height != self.height:
                raise InputClassViolation(f"UU needs uniform heights; job {job.id!r} has height {job.height}")
            self.released.append(job)
        if self.height is None:
            return []
        avg = sum((j.density for j in self.released if j.release <= ctx.now < j.deadline), Fraction(0))
        quota = ceil_div(avg, self.height)
        return [j.id for j in ctx.visible[:quota]]


def alg_uu(instance: Instance) -> Schedule:
    uniform_height(instance.jobs)
    for job in instance.jobs:
        if job.width != 1:
            raise InputClassViolation(f"UU needs unit widths; job {job.id!r} has width {job.width}")
    return run_online(UUPolicy(), instance)


@dataclass
class Queue:
    members: list[str] = field(default_factory=list)
    density_sum: Fraction = Fraction(0)
    end: int = 0  # ending time of the last member


class ADPolicy:
    """Pack arrivals into queues whose density sum stays within h; each queue runs its jobs back to back."""

    def __init__(self, fit: str = NEXT_FIT) -> None:
        if fit not in (NEXT_FIT, FIRST_FIT):
            raise ValueError(f"unknown fit rule {fit!r}")
        self.fit = fit
        self.height: int | None = None
        self.queues: list[Queue] = []
        self.planned: dict[str, int] = {}
        self.queue_of: dict[str, int] = {}
        self._latest_deadline_before = 0  # max deadline among jobs released before now
        self._now_max = 0
        self._last_release = -1

    def _admit_agreeable(self, job: Job) -> None:
        if job.release > self._last_release:
            self._latest_deadline_before = max(self._latest_deadline_before, self._now_max)
            self._last_release = job.release
        if job.deadline < self._latest_deadline_before:
            raise NotAgreeable(f"job {job.id!r} is due before a job released earlier")
        self._now_max = max(self._now_max, job.deadline)

    def _pick_queue(self, den: Fraction) -> int:
        h = self.height
        if self.fit == FIRST_FIT:
            candidates = range(len(self.queues))
        else:
            candidates = range(len(self.queues) - 1, len(self.queues)) if self.queues else range(0)
        for q in candidates:
            if self.queues[q].density_sum + den <= h:
                return q
        self.queues.append(Queue())
        return len(self.queues) - 1

    def insert(self, job: Job) -> int:
        q = self._pick_queue(job.density)
        queue = self.queues[q]
        start = queue.end if job.release <= queue.end else job.release
        queue.members.append(job.id)
        queue.density_sum += job.density
        queue.end = start + job.width
        self.planned[job.id] = start
        self.queue_of[job.id] = q
        return start

    def decide(self, ctx: OnlineContext) -> list[str]:
        for job in ctx.arrivals:
            if self.height is None:
                self.height = job.height
            elif job.height != self.height:
                raise InputClassViolation(f"AD needs uniform heights; job {job.id!r} has height {job.height}")
            self._admit_agreeable(job)
            self.insert(job)
        return [j.id for j in ctx.visible if self.planned.get(j.id) == ctx.now]


def same_release_or_deadline(jobs: Sequence[Job]) -> bool:
    return len({j.release for j in jobs}) <= 1 or len({j.deadline for j in jobs}) <= 1


def alg_ad(instance: Instance, fit: str = NEXT_FIT) -> Schedule:
    uniform_height(instance.jobs)
    if not is_agreeable(instance.jobs):
        raise NotAgreeable("deadlines do not follow release order")
    if fit == FIRST_FIT and not same_release_or_deadline(instance.jobs):
        raise InputClassViolation("first-fit AD needs a common release time or a common deadline")
    return run_online(ADPolicy(fit), instance)
