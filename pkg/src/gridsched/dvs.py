"""Speed-scaling reference profiles (AVR, BKP, YDS) over integral slots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Instance, cost

E = math.e


@dataclass(frozen=True)
class DvsJob:
    id: str
    release: int
    deadline: int
    work: int


@dataclass(frozen=True)
class DvsInstance:
    jobs: tuple[DvsJob, ...]
    alpha: float

    @property
    def horizon(self) -> int:
        return max((j.deadline for j in self.jobs), default=0)


def to_dvs(instance: Instance) -> DvsInstance:
    return DvsInstance(
        tuple(DvsJob(j.id, j.release, j.deadline, j.width * j.height) for j in instance.jobs),
        instance.alpha,
    )


def avr_speed_at(jobs: Iterable[DvsJob], t: int) -> Fraction:
    return sum((Fraction(j.work, j.deadline - j.release) for j in jobs if j.release <= t < j.deadline), Fraction(0))


def avr_profile(dvs: DvsInstance) -> list[Fraction]:
    speeds = [Fraction(0)] * dvs.horizon
    for j in dvs.jobs:
        den = Fraction(j.work, j.deadline - j.release)
        for t in range(j.release, j.deadline):
            speeds[t] += den
    return speeds


def bkp_threshold(job: DvsJob, t: float) -> float:
    """Smallest t' whose interval [e*t - (e-1)*t', t') encloses the job's window."""
    return max(float(job.deadline), (E * t - job.release) / (E - 1))


def bkp_speed_at(jobs: Iterable[DvsJob], t: int) -> float:
    """BKP speed at time ``t`` using only the jobs released by ``t``.

    The enclosed work is a step function of t' and the ratio decreases between
    steps, so the supremum sits at one of the per-job thresholds.
    """
    thresholds: dict[float, int] = {}
    for j in jobs:
        if j.release <= t:
            theta = bkp_threshold(j, t)
            thresholds[theta] = thresholds.get(theta, 0) + j.work
    best = 0.0
    enclosed = 0
    for theta in sorted(thresholds):
        enclosed += thresholds[theta]
        best = max(best, enclosed / (theta - t))
    return best


def bkp_profile(dvs: DvsInstance) -> list[float]:
    return [bkp_speed_at(dvs.jobs, t) for t in range(dvs.horizon)]


def yds_profile(dvs: DvsInstance) -> list[Fraction]:
    """Optimal preemptive speeds by repeatedly peeling off the densest interval."""
    horizon = dvs.horizon
    speeds = [Fraction(0)] * horizon
    alive = list(range(horizon))  # compressed slot index -> original slot
    pending = [(j.release, j.deadline, j.work) for j in dvs.jobs if j.work > 0]
    while pending:
        best: tuple[Fraction, int, int] | None = None
        for a in sorted({r for r, _, _ in pending}):
            for b in sorted({d for _, d, _ in pending if d > a}):
                work = sum(w for r, d, w in pending if a <= r and d <= b)
                if work == 0:
                    continue
                dens = Fraction(work, b - a)
                if best is None or dens > best[0]:
                    best = (dens, a, b)
        assert best is not None
        dens, a, b = best
        for slot in alive[a:b]:
            speeds[slot] = dens
        del alive[a:b]
        gap = b - a

        def squeeze(x: int) -> int:
            return x if x <= a else (a if x <= b else x - gap)

        pending = [(squeeze(r), squeeze(d), w) for r, d, w in pending if not (a <= r and d <= b)]
    return speeds


def profile_cost(speeds: Sequence[float], alpha: float) -> float:
    return cost(speeds, alpha)


def profile_shortfall(dvs: DvsInstance, speeds: Sequence[float], tol: float = 1e-9) -> list[tuple[int, int]]:
    """Intervals ``[t1, t2)`` whose capacity is below the work confined to them."""
    horizon = dvs.horizon
    prefix = [0.0]
    for s in speeds[:horizon]:
        prefix.append(prefix[-1] + float(s))
    while len(prefix) <= horizon:
        prefix.append(prefix[-1])
    points = sorted({j.release for j in dvs.jobs})
    ends = sorted({j.deadline for j in dvs.jobs})
    bad = []
    for t1 in points:
        for t2 in ends:
            if t2 <= t1:
                continue
            demand = sum(j.work for j in dvs.jobs if t1 <= j.release and j.deadline <= t2)
            if prefix[t2] - prefix[t1] < demand - tol * max(1.0, demand):
                bad.append((t1, t2))
    return bad
