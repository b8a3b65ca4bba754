"""Slot-by-slot online simulation with irrevocable start decisions."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Protocol, Sequence

from ..core import Instance, Job, Schedule, edf_order
from ..errors import InfeasibleOutcome


@dataclass(frozen=True)
class OnlineContext:
    """What a policy may look at in slot ``now``."""

    now: int
    arrivals: tuple[Job, ...]
    visible: tuple[Job, ...]  # released and unstarted, EDF order
    started: Mapping[str, int]


class Policy(Protocol):
    def decide(self, ctx: OnlineContext) -> Iterable[str]:
        """Ids of visible jobs to start at ``ctx.now``."""
        ...


class Simulation:
    """Drives a policy one slot at a time; arrivals may be supplied incrementally."""

    def __init__(self, policy: Policy) -> None:
        self.policy = policy
        self.now = 0
        self.visible: dict[str, Job] = {}
        self.started: dict[str, int] = {}

    def step(self, arrivals: Sequence[Job] = ()) -> list[str]:
        for job in arrivals:
            if job.release != self.now:
                raise ValueError(f"job {job.id!r} released at {job.release} but revealed at {self.now}")
            if job.id in self.visible or job.id in self.started:
                raise ValueError(f"job {job.id!r} revealed twice")
            self.visible[job.id] = job
        ctx = OnlineContext(
            self.now,
            tuple(edf_order(arrivals)),
            tuple(edf_order(self.visible.values())),
            dict(self.started),
        )
        chosen = []
        for job_id in self.policy.decide(ctx):
            if job_id not in self.visible:
                raise RuntimeError(f"policy started {job_id!r}, which is not visible at t={self.now}")
            job = self.visible.pop(job_id)
            if self.now > job.latest_start:
                raise InfeasibleOutcome(job_id, self.now)
            self.started[job_id] = self.now
            chosen.append(job_id)
        for job in self.visible.values():
            if job.latest_start <= self.now:
                raise InfeasibleOutcome(job.id, self.now)
        self.now += 1
        return chosen

    def schedule(self) -> Schedule:
        return Schedule(dict(self.started))


def run_online(policy: Policy, instance: Instance) -> Schedule:
    by_release: dict[int, list[Job]] = defaultdict(list)
    for job in instance.jobs:
        by_release[job.release].append(job)
    sim = Simulation(policy)
    for _ in range(instance.horizon):
        sim.step(by_release.get(sim.now, ()))
    if sim.visible:
        raise InfeasibleOutcome(next(iter(sim.visible)), sim.now)
    return sim.schedule()
