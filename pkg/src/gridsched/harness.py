"""Seeded instance generation, batch comparison against exact optima, and per-slot invariant checks."""

from __future__ import annotations

import csv
import io
import json
import math
import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import bounds
from .core import (
    Instance, Job, Schedule, avg_profile, ceil_div, classify_width, close, cost,
    load_profile, raw_loads, schedule_cost,
)
from .dvs import avr_profile, bkp_profile, to_dvs, yds_profile
from .errors import UnsatisfiableConstraint
from .exact import brute_force, run_e, run_eplus, run_unit
from .online.general import alg_general, convert, relax_offset, relax_sch, shrink_sch
from .online.horizontal import FIRST_FIT, NEXT_FIT, alg_ad, alg_uu
from .online.uniform import align_fi, align_sch, alg_uv, free_sch, is_tight
from .online.vertical import alg_v

CONSTRAINTS = (
    "any", "unit-width", "uniform-width", "unit-uniform-height", "agreeable", "same-release", "same-deadline",
)
CSV_COLUMNS = ("seed", "instance_idx", "algorithm", "cost", "opt_cost", "ratio", "bound", "violated")


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int = 0
    count: int = 100
    n: int = 5  # most jobs per instance
    tau: int = 10
    width: tuple[int, int] = (1, 3)
    height: tuple[int, int] = (1, 3)
    constraint: str = "any"
    alpha: float = 2.0
    n_min: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorSpec":
        data = dict(data)
        for key in ("width", "height"):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)


def _check_spec(spec: GeneratorSpec) -> None:
    if spec.constraint not in CONSTRAINTS:
        raise UnsatisfiableConstraint(f"unknown constraint {spec.constraint!r}")
    (wlo, whi), (hlo, hhi) = spec.width, spec.height
    if spec.constraint in ("unit-width", "unit-uniform-height"):
        wlo = whi = 1
    if not (1 <= wlo <= whi and 1 <= hlo <= hhi and 1 <= spec.n_min <= spec.n):
        raise UnsatisfiableConstraint("width, height and job-count ranges must be non-empty and positive")
    if wlo > spec.tau:
        raise UnsatisfiableConstraint(f"no width in {spec.width} fits a horizon of {spec.tau}")


def _draw_instance(rng: random.Random, spec: GeneratorSpec) -> Instance:
    c = spec.constraint
    n = rng.randint(spec.n_min, spec.n)
    wlo, whi = (1, 1) if c in ("unit-width", "unit-uniform-height") else spec.width
    whi = min(whi, spec.tau)
    common_w = rng.randint(wlo, whi)
    common_h = rng.randint(*spec.height)
    uniform_h = c in ("unit-uniform-height", "agreeable", "same-release", "same-deadline")
    widths = [common_w if c == "uniform-width" else rng.randint(wlo, whi) for _ in range(n)]
    heights = [common_h if uniform_h else rng.randint(*spec.height) for _ in range(n)]
    windows = []
    if c == "same-release":
        r = rng.randint(0, spec.tau - max(widths))
        windows = [(r, rng.randint(r + w, spec.tau)) for w in widths]
    elif c == "same-deadline":
        d = rng.randint(max(widths), spec.tau)
        windows = [(rng.randint(0, d - w), d) for w in widths]
    else:
        for w in widths:
            r = rng.randint(0, spec.tau - w)
            windows.append((r, rng.randint(r + w, spec.tau)))
    if c == "agreeable":
        releases = sorted(r for r, _ in windows)
        deadlines = sorted(d for _, d in windows)
        windows = list(zip(releases, deadlines))
        widths = [min(w, d - r) for w, (r, d) in zip(widths, windows)]
    jobs = tuple(Job(f"j{k}", r, d, w, h) for k, ((r, d), w, h) in enumerate(zip(windows, widths, heights)))
    return Instance(jobs, spec.alpha)


def generate(spec: GeneratorSpec) -> list[Instance]:
    _check_spec(spec)
    rng = random.Random(spec.seed)
    return [_draw_instance(rng, spec) for _ in range(spec.count)]


# ---------------------------------------------------------------------------
# algorithms and optima


def run_named(name: str, instance: Instance, base: float = 2) -> Schedule:
    """Harness algorithm names: v-avr, v-bkp, v-yds, uv, general, uu, ad-nextfit, ad-firstfit."""
    if name == "v":
        name = "v-bkp"
    if name.startswith("v-"):
        return alg_v(instance, name[2:])
    if name == "uv":
        return alg_uv(instance)
    if name == "general":
        return alg_general(instance, base)
    if name == "uu":
        return alg_uu(instance)
    if name == "ad-nextfit":
        return alg_ad(instance, NEXT_FIT)
    if name == "ad-firstfit":
        return alg_ad(instance, FIRST_FIT)
    raise ValueError(f"unknown algorithm {name!r}")


def optimum(instance: Instance, method: str = "e") -> tuple[Schedule, float]:
    if method == "brute":
        return brute_force(instance)
    runner = {"e": run_e, "eplus": run_eplus, "unit": run_unit}.get(method)
    if runner is None:
        raise ValueError(f"unknown optimum method {method!r}")
    res = runner(instance)
    return res.schedule, res.cost


@dataclass(frozen=True)
class ReportRow:
    seed: int
    instance_idx: int
    algorithm: str
    cost: float
    opt_cost: float
    ratio: float
    bound: float
    violated: bool


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)
    opt_method: str = "e"
    slot_violations: dict[str, int] = field(default_factory=dict)

    def violations(self) -> list[ReportRow]:
        return [r for r in self.rows if r.violated]

    def aggregate(self) -> dict:
        per: dict[str, list[ReportRow]] = defaultdict(list)
        for r in self.rows:
            per[r.algorithm].append(r)
        summary = {}
        for name, rows in per.items():
            ratios = [r.ratio for r in rows]
            summary[name] = {
                "instances": len(rows),
                "max_ratio": max(ratios),
                "mean_ratio": math.fsum(ratios) / len(ratios),
                "bound": max(r.bound for r in rows),
                "violations": sum(r.violated for r in rows),
                "slot_violations": self.slot_violations.get(name, 0),
            }
        return {"opt_method": self.opt_method, "algorithms": summary}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.rows:
            writer.writerow([r.seed, r.instance_idx, r.algorithm, repr(r.cost), repr(r.opt_cost),
                             repr(r.ratio), repr(r.bound), int(r.violated)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.aggregate(), indent=2, sort_keys=True)


def ratio_of(alg_cost: float, opt_cost: float) -> float:
    if opt_cost == 0:
        return 1.0 if alg_cost == 0 else math.inf
    return alg_cost / opt_cost


def compare(instances: Sequence[Instance], algorithms: Iterable[str], opt_method: str = "e",
            seed: int = 0, base: float = 2, check_slots: bool = True) -> Report:
    algorithms = list(algorithms)
    report = Report(opt_method=opt_method)
    for idx, inst in enumerate(instances):
        opt_sched, opt_cost = optimum(inst, opt_method)
        for name in algorithms:
            if name == "exact":
                sched, alg_cost = opt_sched, opt_cost
            else:
                sched = run_named(name, inst, base)
                alg_cost = schedule_cost(inst, sched)
            bound_name = "v-bkp" if name == "v" else name
            bound = bounds.ratio_bound(bound_name, inst.alpha, inst.jobs)
            ratio = ratio_of(alg_cost, opt_cost)
            violated = ratio > bound * (1 + 1e-9) or ratio < 1 - 1e-9
            report.rows.append(ReportRow(seed, idx, name, alg_cost, opt_cost, ratio, bound, violated))
            if check_slots:
                bad = slot_checks(name, inst, sched)
                report.slot_violations[name] = report.slot_violations.get(name, 0) + len(bad)
    return report


# ---------------------------------------------------------------------------
# per-slot invariant checks


def v_slot_violations(instance: Instance, schedule: Schedule, reference: Sequence[float]) -> list[int]:
    """Slots where V overshoots the reference by a full job or more."""
    loads = load_profile(instance, schedule)
    tallest = [0] * len(loads)
    for j in instance.jobs:
        st = schedule.assignments[j.id]
        tallest[st] = max(tallest[st], j.height)
    bad = []
    for t, load in enumerate(loads):
        ref = reference[t] if t < len(reference) else 0
        if load > ref and not load < ref + tallest[t]:
            bad.append(t)
    return bad


def uu_slot_violations(instance: Instance, schedule: Schedule) -> list[int]:
    if not instance.jobs:
        return []
    h = instance.jobs[0].height
    loads = load_profile(instance, schedule)
    avg = avg_profile(instance)
    return [t for t, load in enumerate(loads) if load > h * ceil_div(avg[t], h)]


def ad_slot_violations(instance: Instance, schedule: Schedule) -> dict[str, list[int]]:
    """Slots breaking the high-average bound (3h*ceil(avg/h)) and the low-average bound (h)."""
    out: dict[str, list[int]] = {"above": [], "below": []}
    if not instance.jobs:
        return out
    h = instance.jobs[0].height
    loads = load_profile(instance, schedule)
    avg = avg_profile(instance)
    for t, load in enumerate(loads):
        if avg[t] > h:
            if load > 3 * h * ceil_div(avg[t], h):
                out["above"].append(t)
        elif load > h:
            out["below"].append(t)
    return out


def three_slot_violations(after: Sequence[int], before: Sequence[int], offset: int) -> list[int]:
    def at(t: int) -> int:
        return before[t] if 0 <= t < len(before) else 0

    return [t for t, load in enumerate(after) if load > at(t) + at(t - offset) + at(t + offset)]


def align_checks(instance: Instance, schedule: Schedule) -> list[str]:
    """Grid alignment of the loose jobs of a uniform-width instance, checked against ``schedule``."""
    if not instance.jobs or len({j.width for j in instance.jobs}) != 1:
        return []
    w = instance.jobs[0].width
    loose = [j for j in instance.jobs if not is_tight(j, w)]
    if not loose:
        return []
    aligned = align_fi(loose, w)
    src = {j.id: schedule.assignments[j.id] for j in loose}
    moved = align_sch(Schedule(src), aligned, w)
    problems = []
    horizon = instance.horizon
    a_jobs = [a.as_job() for a in aligned]
    for a in a_jobs:
        st = moved.assignments[a.id]
        if st < a.release or st + a.width > a.deadline or st % w:
            problems.append(f"align: {a.id} not on the grid inside its aligned window")
    before = raw_loads(loose, src, horizon)
    after = raw_loads(a_jobs, moved.assignments, horizon)
    if three_slot_violations(after, before, w - 1):
        problems.append("align: three-slot load bound")
    c_before, c_after = cost(before, instance.alpha), cost(after, instance.alpha)
    if c_after > 3**instance.alpha * c_before * (1 + 1e-9):
        problems.append("align: cost bound")
    freed = free_sch(moved)
    if not close(cost(raw_loads(loose, freed.assignments, horizon), instance.alpha), c_after):
        problems.append("free: cost changed")
    return problems


def relax_checks(instance: Instance, schedule: Schedule) -> list[str]:
    """Rounding each width class up to a power of two, checked against ``schedule`` (base 2)."""
    problems = []
    horizon = instance.horizon
    classes: dict[int, list[Job]] = defaultdict(list)
    for j in instance.jobs:
        classes[classify_width(j)].append(j)
    for p, members in sorted(classes.items()):
        nice = convert(members)
        src = {j.id: schedule.assignments[j.id] for j in members}
        relaxed = relax_sch(Schedule(src), nice)
        n_jobs = [n.as_job() for n in nice]
        for nj in n_jobs:
            st = relaxed.assignments[nj.id]
            if st < nj.release or st + nj.width > nj.deadline:
                problems.append(f"relax: {nj.id} outside its rounded window")
        before = raw_loads(members, src, horizon)
        after = raw_loads(n_jobs, relaxed.assignments, horizon)
        if three_slot_violations(after, before, relax_offset(p)):
            problems.append(f"relax: three-slot load bound, class {p}")
        c_before, c_after = cost(before, instance.alpha), cost(after, instance.alpha)
        if c_after > 3**instance.alpha * c_before * (1 + 1e-9):
            problems.append(f"relax: cost bound, class {p}")
        shrunk = shrink_sch(relaxed, nice)
        back = raw_loads(members, shrunk.assignments, horizon)
        if any(b > a for a, b in zip(after, back)):
            problems.append(f"shrink: load above the rounded schedule, class {p}")
        if cost(back, instance.alpha) > c_after * (1 + 1e-9):
            problems.append(f"shrink: cost increased, class {p}")
    return problems


def slot_checks(name: str, instance: Instance, schedule: Schedule) -> list[str]:
    """Per-slot invariant violations of ``schedule`` as produced by algorithm ``name``."""
    if name == "v":
        name = "v-bkp"
    dvs = to_dvs(instance)
    if name.startswith("v-"):
        ref = {"avr": avr_profile, "bkp": bkp_profile, "yds": yds_profile}[name[2:]](dvs)
        return [f"v: slot {t}" for t in v_slot_violations(instance, schedule, ref)]
    if name == "uu":
        return [f"uu: slot {t}" for t in uu_slot_violations(instance, schedule)]
    if name.startswith("ad-"):
        bad = ad_slot_violations(instance, schedule)
        return [f"ad-{side}: slot {t}" for side, slots in bad.items() for t in slots]
    return []


def dvs_costs(instance: Instance) -> dict[str, float]:
    dvs = to_dvs(instance)
    return {
        "avr": cost(avr_profile(dvs), instance.alpha),
        "bkp": cost(bkp_profile(dvs), instance.alpha),
        "yds": cost(yds_profile(dvs), instance.alpha),
    }


def spec_to_dict(spec: GeneratorSpec) -> dict:
    data = asdict(spec)
    data["width"], data["height"] = list(spec.width), list(spec.height)
    return data


__all__ = [
    "CONSTRAINTS", "CSV_COLUMNS", "GeneratorSpec", "spec_to_dict", "Report", "ReportRow", "align_checks", "compare",
    "ad_slot_violations", "dvs_costs", "generate", "optimum", "relax_checks", "run_named",
    "slot_checks", "uu_slot_violations", "v_slot_violations",
]
