"""Unit-width jobs stacked up to a reference speed profile."""

from __future__ import annotations

from typing import Callable, Sequence, Union

from ..core import Instance
from ..dvs import DvsJob, avr_speed_at, bkp_speed_at, to_dvs, yds_profile
from ..errors import InputClassViolation
from .sim import OnlineContext, run_online

SpeedFn = Callable[[int, Sequence[DvsJob]], float]
Reference = Union[str, Sequence[float]]

ONLINE_REFERENCES: dict[str, SpeedFn] = {
    "avr": lambda t, jobs: avr_speed_at(jobs, t),
    "bkp": lambda t, jobs: bkp_speed_at(jobs, t),
}


class VPolicy:
    """Start EDF-ordered jobs until the slot's load reaches the reference speed.

    ``reference`` is either an online rule name (``"avr"``, ``"bkp"``), evaluated on
    the jobs released so far, or a precomputed per-slot profile. With
    ``force_due`` a job is also started when its last feasible slot arrives;
    a feasible reference never needs this.
    """

    def __init__(self, reference: Reference, force_due: bool = False) -> None:
        if isinstance(reference, str):
            if reference not in ONLINE_REFERENCES:
                raise ValueError(f"unknown online reference {reference!r}")
            self._speed_fn: SpeedFn | None = ONLINE_REFERENCES[reference]
            self._profile: Sequence[float] = ()
        else:
            self._speed_fn = None
            self._profile = reference
        self.force_due = force_due
        self.released: list[DvsJob] = []
        self.trace: list[float] = []  # reference value used in each slot

    def speed(self, t: int) -> float:
        if self._speed_fn is not None:
            return self._speed_fn(t, self.released)
        return self._profile[t] if t < len(self._profile) else 0

    def decide(self, ctx: OnlineContext) -> list[str]:
        for job in ctx.arrivals:
            if job.width != 1:
                raise InputClassViolation(f"algorithm V needs unit widths; job {job.id!r} has width {job.width}")
            self.released.append(DvsJob(job.id, job.release, job.deadline, job.work))
        target = self.speed(ctx.now)
        self.trace.append(target)
        load = 0
        chosen = []
        for job in ctx.visible:
            if load < target or (self.force_due and job.latest_start == ctx.now):
                chosen.append(job.id)
                load += job.height
        return chosen


def resolve_reference(instance: Instance, reference: Reference) -> Reference:
    """Offline references are computed up front; online ones stay symbolic."""
    if reference == "yds":
        return yds_profile(to_dvs(instance))
    return reference


def alg_v(instance: Instance, reference: Reference = "bkp", force_due: bool = False):
    for job in instance.jobs:
        if job.width != 1:
            raise InputClassViolation(f"algorithm V needs unit widths; job {job.id!r} has width {job.width}")
    policy = VPolicy(resolve_reference(instance, reference), force_due)
    return run_online(policy, instance)
