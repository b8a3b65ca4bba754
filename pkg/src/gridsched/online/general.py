"""Arbitrary widths: round each job up to its class width and run one UV per class."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import Instance, Job, Schedule, class_width, classify_width
from .sim import OnlineContext, run_online
from .uniform import UVPolicy


@dataclass(frozen=True)
class NiceJob:
    job: Job
    p: int
    width: int
    deadline: int

    @property
    def id(self) -> str:
        return self.job.id

    @property
    def release(self) -> int:
        return self.job.release

    def as_job(self) -> Job:
        return Job(self.job.id, self.job.release, self.deadline, self.width, self.job.height)


def convert_one(job: Job, base: float = 2) -> NiceJob:
    p = classify_width(job, base)
    width = class_width(p, base)
    return NiceJob(job, p, width, job.release + max(job.span, width))


def convert(jobs: Iterable[Job], base: float = 2) -> list[NiceJob]:
    return [convert_one(j, base) for j in jobs]


def relax_sch(schedule: Schedule, nice: Sequence[NiceJob]) -> Schedule:
    """Stretch each job to its class width, pulling the start back only if the deadline forces it."""
    return Schedule({n.id: min(n.deadline - n.width, schedule.assignments[n.id]) for n in nice})


def shrink_sch(schedule: Schedule, nice: Sequence[NiceJob] = ()) -> Schedule:
    """Keep starts; the original width is a prefix of the rounded one."""
    return Schedule(dict(schedule.assignments))


def relax_offset(p: int) -> int:
    """Slot offset of the three-slot load bound for class ``p`` (base 2)."""
    return max(0, 2 ** (p - 1) - 1) if p >= 1 else 0


class GeneralPolicy:
    """Routes each arrival, rounded to its class width, to that class's own UV."""

    def __init__(self, base: float = 2) -> None:
        self.base = base
        self.classes: dict[int, UVPolicy] = {}

    def decide(self, ctx: OnlineContext) -> list[str]:
        routed: dict[int, list[Job]] = {}
        for job in ctx.arrivals:
            nice = convert_one(job, self.base)
            routed.setdefault(nice.p, []).append(nice.as_job())
            if nice.p not in self.classes:
                self.classes[nice.p] = UVPolicy(nice.width)
        chosen = []
        for p in sorted(self.classes):
            sub = OnlineContext(ctx.now, tuple(routed.get(p, ())), (), {})
            chosen.extend(self.classes[p].decide(sub))
        return chosen


def alg_general(instance: Instance, base: float = 2) -> Schedule:
    if base <= 1:
        raise ValueError("class base must exceed 1")
    return run_online(GeneralPolicy(base), instance)
