"""Adaptive lower-bound constructions played against online algorithms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .bounds import lambda_lower_bound
from .core import Instance, Job, Schedule, cost, load_profile, schedule_cost
from .errors import AlgorithmStalled, InfeasibleOutcome
from .online.greedy import SlotJob, greedy, slot_cost
from .online.registry import make_policy
from .online.sim import Simulation


def lambda_widths(alpha: float, x: int) -> list[int]:
    """Widths of J_1..J_{floor(alpha)+1}: the last two are x and x-1, each earlier one 3w+1."""
    if x < 2:
        raise ValueError("x must be at least 2")
    n = math.floor(alpha) + 1
    widths = [x, x - 1]
    while len(widths) < n:
        widths.insert(0, 3 * widths[0] + 1)
    return widths[-n:]


@dataclass(frozen=True)
class AdversaryTranscript:
    alpha: float
    x: int
    algorithm: str
    jobs: tuple[Job, ...]
    starts: Mapping[str, int]
    alg_cost: float
    last_window_cost: float  # algorithm's cost over the last job's execution interval
    opt_bound: float

    @property
    def instance(self) -> Instance:
        return Instance(self.jobs, self.alpha)

    @property
    def ratio(self) -> float:
        return self.alg_cost / self.opt_bound

    @property
    def lower_bound(self) -> float:
        widths = [j.width for j in self.jobs]
        return lambda_lower_bound(self.alpha, max(widths), min(widths))

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "x": self.x,
            "algorithm": self.algorithm,
            "jobs": [
                {"id": j.id, "release": j.release, "deadline": j.deadline, "width": j.width, "height": j.height,
                 "start": self.starts[j.id], "end": self.starts[j.id] + j.width}
                for j in self.jobs
            ],
            "alg_cost": self.alg_cost,
            "last_window_cost": self.last_window_cost,
            "opt_bound": self.opt_bound,
            "ratio": self.ratio,
            "lower_bound": self.lower_bound,
        }


def adversary_lambda(algorithm: str, alpha: float, x: int, base: float = 2) -> AdversaryTranscript:
    """Release each job inside the previous job's execution, one slot after it starts.

    ``algorithm`` is an online algorithm name.  The first job's window is
    [0, 3*w_1); each later window is the previous execution minus its first
    slot, which is three times the new width except for the last job, whose
    window is exactly as long as the job.
    """
    widths = lambda_widths(alpha, x)
    sim = Simulation(make_policy(algorithm, base=base))
    jobs: list[Job] = []
    nxt = Job("J1", 0, 3 * widths[0], widths[0], 1)
    while True:
        arrivals = [nxt] if nxt is not None and nxt.release == sim.now else []
        if arrivals:
            jobs.append(nxt)
            nxt = None
        current = jobs[-1]
        try:
            sim.step(arrivals)
        except InfeasibleOutcome as exc:
            raise AlgorithmStalled(f"{algorithm} never started {current.id}") from exc
        if current.id in sim.started and nxt is None and len(jobs) < len(widths):
            st = sim.started[current.id]
            i = len(jobs)
            nxt = Job(f"J{i + 1}", st + 1, st + current.width, widths[i], 1)
        if len(jobs) == len(widths) and jobs[-1].id in sim.started:
            break
    instance = Instance(tuple(jobs), alpha)
    schedule = sim.schedule()
    profile = load_profile(instance, schedule)
    last = jobs[-1]
    st = schedule.assignments[last.id]
    return AdversaryTranscript(
        alpha, x, algorithm, tuple(jobs), dict(schedule.assignments),
        cost(profile, alpha), cost(profile, alpha, range(st, st + last.width)),
        x * 3 ** math.floor(alpha),
    )


def lambda_opt_schedule(transcript: AdversaryTranscript) -> tuple[Schedule, float]:
    """Non-overlapping schedule: each job sits in whichever side of its window the next window leaves free."""
    jobs = transcript.jobs
    starts = {}
    for job, inner in zip(jobs, jobs[1:]):
        left = inner.release - job.release
        starts[job.id] = job.release if left >= job.width else inner.deadline
    starts[jobs[-1].id] = jobs[-1].release
    schedule = Schedule(starts)
    return schedule, schedule_cost(transcript.instance, schedule)


@dataclass(frozen=True)
class GreedyAdversary:
    k: int
    jobs: tuple[SlotJob, ...]
    expected_greedy: float
    expected_opt: float


def expected_greedy_cost(k: int, alpha: float = 2) -> float:
    """Greedy's cost on the k-round construction (equals 3*2**k - 4 when alpha is 2)."""
    return sum(i**alpha * 2 ** (k - i - 1) for i in range(1, k - 1)) + 2 * k**alpha


def greedy_adversary(k: int, alpha: float = 2) -> GreedyAdversary:
    """Each round offers only the slots greedy just used, halving the job count until two remain."""
    if k < 2:
        raise ValueError("k must be at least 2")
    allowed = frozenset(range(1, 2**k + 1))
    loads: dict[int, int] = {}
    jobs: list[SlotJob] = []
    for i in range(1, k + 1):
        count = 2 ** (k - i) if i < k else 2
        batch = [SlotJob(f"r{i}j{n}", allowed) for n in range(count)]
        placed = greedy(batch, loads)
        jobs.extend(batch)
        allowed = frozenset(placed.values())
    return GreedyAdversary(k, tuple(jobs), expected_greedy_cost(k, alpha), float(2**k))


def greedy_run_cost(adv: GreedyAdversary, alpha: float = 2) -> float:
    return slot_cost(greedy(adv.jobs), alpha)
