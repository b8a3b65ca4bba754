"""Job model, loads, cost and the small pieces of bookkeeping every algorithm shares."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InfeasibleAssignment, InvalidAlpha, InvalidJob, UnassignedJob

REL_TOL = 1e-9


@dataclass(frozen=True)
class Job:
    """A power request: ``height`` units for ``width`` consecutive slots inside ``[release, deadline)``."""

    id: str
    release: int
    deadline: int
    width: int
    height: int

    def __post_init__(self) -> None:
        for name in ("release", "deadline", "width", "height"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidJob(f"job {self.id!r}: {name} must be an integer, got {value!r}")
        if self.release < 0:
            raise InvalidJob(f"job {self.id!r}: release {self.release} is negative")
        if self.release >= self.deadline:
            raise InvalidJob(f"job {self.id!r}: release {self.release} >= deadline {self.deadline}")
        if self.width < 1 or self.height < 1:
            raise InvalidJob(f"job {self.id!r}: width and height must be >= 1")
        if self.width > self.span:
            raise InvalidJob(f"job {self.id!r}: width {self.width} exceeds window length {self.span}")

    @property
    def span(self) -> int:
        return self.deadline - self.release

    @property
    def work(self) -> int:
        return self.width * self.height

    @property
    def density(self) -> Fraction:
        return Fraction(self.work, self.span)

    @property
    def latest_start(self) -> int:
        return self.deadline - self.width


@dataclass(frozen=True)
class Instance:
    jobs: tuple[Job, ...]
    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "jobs", tuple(self.jobs))
        check_alpha(self.alpha)
        seen: set[str] = set()
        for job in self.jobs:
            if job.id in seen:
                raise InvalidJob(f"duplicate job id {job.id!r}")
            seen.add(job.id)

    @property
    def horizon(self) -> int:
        return max((j.deadline for j in self.jobs), default=0)

    def job(self, job_id: str) -> Job:
        for j in self.jobs:
            if j.id == job_id:
                return j
        raise KeyError(job_id)

    def with_alpha(self, alpha: float) -> "Instance":
        return Instance(self.jobs, alpha)


@dataclass(frozen=True)
class Schedule:
    """Start time per job id."""

    assignments: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignments", dict(self.assignments))

    def start(self, job_id: str) -> int:
        return self.assignments[job_id]

    def __len__(self) -> int:
        return len(self.assignments)


def check_alpha(alpha: float) -> None:
    if not (isinstance(alpha, (int, float)) and alpha > 1 and math.isfinite(alpha)):
        raise InvalidAlpha(f"alpha must be a finite number > 1, got {alpha!r}")


def validate_schedule(instance: Instance, schedule: Schedule) -> list[str]:
    """Human-readable violations; empty means total and feasible."""
    problems = []
    known = {j.id for j in instance.jobs}
    for job in instance.jobs:
        if job.id not in schedule.assignments:
            problems.append(f"{job.id}: missing assignment")
            continue
        st = schedule.assignments[job.id]
        if isinstance(st, bool) or not isinstance(st, int):
            problems.append(f"{job.id}: start {st!r} is not an integer")
        elif st < job.release:
            problems.append(f"{job.id}: starts at {st} before release {job.release}")
        elif st + job.width > job.deadline:
            problems.append(f"{job.id}: ends at {st + job.width} after deadline {job.deadline}")
    for job_id in schedule.assignments:
        if job_id not in known:
            problems.append(f"{job_id}: not a job of the instance")
    return problems


def load_profile(instance: Instance, schedule: Schedule, horizon: int | None = None) -> list[int]:
    """Per-slot load over ``[0, horizon)``; raises on partial or infeasible schedules."""
    for job in instance.jobs:
        if job.id not in schedule.assignments:
            raise UnassignedJob(job.id)
        st = schedule.assignments[job.id]
        if st < job.release or st + job.width > job.deadline:
            raise InfeasibleAssignment(job.id, f"[{st}, {st + job.width}) outside [{job.release}, {job.deadline})")
    return raw_loads(instance.jobs, schedule.assignments, instance.horizon if horizon is None else horizon)


def raw_loads(jobs: Iterable[Job], starts: Mapping[str, int], horizon: int) -> list[int]:
    """Loads of whatever subset of ``jobs`` has a start, no feasibility check."""
    loads = [0] * horizon
    for job in jobs:
        st = starts.get(job.id)
        if st is None:
            continue
        end = st + job.width
        if end > len(loads):
            loads.extend([0] * (end - len(loads)))
        for t in range(max(st, 0), end):
            loads[t] += job.height
    return loads


def cost(profile: Sequence[float], alpha: float, slots: Iterable[int] | None = None) -> float:
    """Sum of ``load ** alpha``, optionally over a subset of slots."""
    check_alpha(alpha)
    if slots is None:
        values = profile
    else:
        values = [profile[t] for t in slots if 0 <= t < len(profile)]
    return math.fsum(float(v) ** alpha for v in values if v)


def schedule_cost(instance: Instance, schedule: Schedule, alpha: float | None = None) -> float:
    return cost(load_profile(instance, schedule), instance.alpha if alpha is None else alpha)


def avg_profile(instance: Instance | Iterable[Job], horizon: int | None = None) -> list[Fraction]:
    """Exact sum of densities of the jobs whose window covers each slot."""
    jobs = instance.jobs if isinstance(instance, Instance) else tuple(instance)
    if horizon is None:
        horizon = max((j.deadline for j in jobs), default=0)
    avg = [Fraction(0)] * horizon
    for job in jobs:
        den = job.density
        for t in range(job.release, min(job.deadline, horizon)):
            avg[t] += den
    return avg


def partition_slots(avg: Sequence[Fraction | float], h: float) -> tuple[frozenset[int], frozenset[int]]:
    """Split slots into those with average load above ``h`` and the rest."""
    if h <= 0:
        raise ValueError("h must be positive")
    above = frozenset(t for t, a in enumerate(avg) if a > h)
    below = frozenset(range(len(avg))) - above
    return above, below


def classify_width(job: Job | int, base: float = 2) -> int:
    """Smallest ``p >= 0`` with ``base**(p-1) < width <= base**p``."""
    width = job.width if isinstance(job, Job) else job
    if base <= 1:
        raise ValueError("class base must exceed 1")
    p = 0
    while base**p < width:
        p += 1
    return p


def class_width(p: int, base: float = 2) -> int:
    """Integral width that every job of class ``p`` is rounded up to."""
    return math.ceil(base**p)


def edf_key(job: Job) -> tuple[int, int, str]:
    return (job.deadline, job.release, job.id)


def edf_order(jobs: Iterable[Job]) -> list[Job]:
    return sorted(jobs, key=edf_key)


def ceil_div(a: Fraction | int, b: Fraction | int) -> int:
    return math.ceil(Fraction(a) / Fraction(b))


def is_agreeable(jobs: Sequence[Job]) -> bool:
    """No pair where one job is released strictly earlier but due strictly later."""
    ordered = sorted(jobs, key=lambda j: (j.release, j.deadline))
    return all(a.deadline <= b.deadline for a, b in zip(ordered, ordered[1:]))


def close(a: float, b: float, tol: float = REL_TOL) -> bool:
    return math.isclose(a, b, rel_tol=tol, abs_tol=tol)


def leq(a: float, b: float, tol: float = REL_TOL) -> bool:
    """``a <= b`` up to relative tolerance."""
    return a <= b or close(a, b, tol)
