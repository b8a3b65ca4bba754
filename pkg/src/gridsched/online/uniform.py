"""Uniform-width jobs: tight ones start on release, loose ones run on a w-aligned grid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import Instance, Job, Schedule
from ..dvs import DvsJob, bkp_speed_at
from ..errors import InputClassViolation, NotLoose
from .sim import OnlineContext, run_online


def is_tight(job: Job, width: int | None = None) -> bool:
    return job.span <= 2 * (job.width if width is None else width)


@dataclass(frozen=True)
class AlignedJob:
    job: Job
    release: int
    deadline: int

    @property
    def id(self) -> str:
        return self.job.id

    def as_job(self) -> Job:
        return Job(self.job.id, self.release, self.deadline, self.job.width, self.job.height)


def align_one(job: Job, width: int) -> AlignedJob:
    if is_tight(job, width):
        raise NotLoose(f"job {job.id!r} has window {job.span} <= {2 * width}")
    release = -(-job.release // width) * width
    deadline = job.deadline // width * width
    return AlignedJob(job, release, deadline)


def align_fi(jobs: Iterable[Job], width: int | None = None) -> list[AlignedJob]:
    """Shrink each loose window to the multiples of the common width inside it."""
    jobs = list(jobs)
    if width is None:
        width = jobs[0].width if jobs else 1
    return [align_one(j, width) for j in jobs]


def align_sch(schedule: Schedule, aligned: Sequence[AlignedJob], width: int) -> Schedule:
    """Round every start up to the grid, clamped so the job still meets its aligned deadline."""
    out = {}
    for a in aligned:
        st = schedule.assignments[a.id]
        out[a.id] = min(a.deadline - width, -(-st // width) * width)
    return Schedule(out)


def free_sch(schedule: Schedule) -> Schedule:
    """Aligned starts are already feasible for the original jobs."""
    return Schedule(dict(schedule.assignments))


class UVPolicy:
    """Algorithm UV for a single common width (inferred from the first job if not given)."""

    def __init__(self, width: int | None = None) -> None:
        self.width = width
        self.waiting: dict[str, AlignedJob] = {}
        self.grid_jobs: list[DvsJob] = []  # loose jobs on the time axis divided by width

    def _check(self, job: Job) -> None:
        if self.width is None:
            self.width = job.width
        if job.width != self.width:
            raise InputClassViolation(f"uniform width {self.width} expected; job {job.id!r} has {job.width}")

    def decide(self, ctx: OnlineContext) -> list[str]:
        chosen = []
        for job in ctx.arrivals:
            self._check(job)
            if is_tight(job, self.width):
                chosen.append(job.id)
            else:
                a = align_one(job, self.width)
                self.waiting[job.id] = a
                self.grid_jobs.append(DvsJob(job.id, a.release // self.width, a.deadline // self.width, job.height))
        w = self.width
        if w is None or ctx.now % w:
            return chosen
        block = ctx.now // w
        target = bkp_speed_at(self.grid_jobs, block)
        ready = sorted(
            (a for a in self.waiting.values() if a.release <= ctx.now),
            key=lambda a: (a.deadline, a.release, a.id),
        )
        load = 0
        for a in ready:
            if load >= target:
                break
            chosen.append(a.id)
            load += a.job.height
            del self.waiting[a.id]
        return chosen


def check_uniform_width(jobs: Sequence[Job]) -> int | None:
    widths = {j.width for j in jobs}
    if len(widths) > 1:
        raise InputClassViolation(f"uniform width expected, found widths {sorted(widths)}")
    return next(iter(widths), None)


def alg_uv(instance: Instance) -> Schedule:
    width = check_uniform_width(instance.jobs)
    return run_online(UVPolicy(width), instance)

