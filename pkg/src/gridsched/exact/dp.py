"""Window-by-window configuration dynamic program.

A left-table row records, for every job, its start time or ``None`` if it has
not started.  Whether a started job is finished or still running at the
current boundary follows from its width, so the row holds everything the
configuration pairs (st, et) carry, and those pairs are rebuilt from it when
the validity rules are checked.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..core import Instance, Job, Schedule, close
from ..errors import InfeasibleInstance
from .windows import WindowDecomposition, max_overlap

CHUNK_CELLS = 2_000_000  # cap on loads-matrix cells materialized at once
DONE, LATER = -2, -1  # identity codes besides "running since start s"


def config_violations(st: int, et: int, job: Job, lo: int, hi: int) -> list[int]:
    """Numbers of the validity rules that the segment (st, et) breaks in window [lo, hi).

    ``lo - 1`` as start means "started before the window", ``hi + 1`` as end
    means "still running after it"; (lo-1, lo) and (hi, hi+1) mark a job that
    runs entirely before or entirely after the window.
    """
    broken = []
    if st >= et:
        broken.append(1)
    if et > st + job.width:
        broken.append(2)
    if et < st + job.width and st >= lo and et <= hi:
        broken.append(3)
    if st < job.release and st < hi:
        broken.append(4)
    if et > job.deadline and et > lo:
        broken.append(5)
    return broken


def list_configurations(job: Job, lo: int, hi: int, starts: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """All valid (st, et) pairs of ``job`` in window [lo, hi).

    ``starts`` optionally restricts which in-window start times are tried; the
    sentinel starts lo-1 and hi are always kept.
    """
    allowed = None if starts is None else set(starts)
    out = []
    for st in range(lo - 1, hi + 1):
        if allowed is not None and lo <= st < hi and st not in allowed:
            continue
        for et in range(max(st + 1, lo), hi + 2):
            if not config_violations(st, et, job, lo, hi):
                out.append((st, et))
    return out


def left_config(job: Job, start: int | None, boundary: int) -> tuple[int, int]:
    """The (st, et) pair a left-table row implies for ``job`` at ``boundary``."""
    if start is None:
        return boundary, boundary + 1
    if start + job.width <= boundary:
        return start, start + job.width
    return start, boundary + 1


def concatenate(job: Job, start: int | None, cfg: tuple[int, int], lo: int, hi: int) -> tuple[int, int] | None:
    """Join a left status with a window configuration; ``None`` if they are not compatible."""
    st, et = cfg
    if start is not None and start + job.width <= lo:
        # finished earlier: the window must see it as "before"
        return (start, start + job.width) if (st, et) == (lo - 1, lo) else None
    if start is not None:
        # running across lo: continue from before the window
        return (start, et) if st == lo - 1 and et > lo else None
    # not started: start inside the window or later
    return (st, et) if st >= lo else None


@dataclass
class Stage:
    window: tuple[int, int]
    jobs: int
    listed: int  # size of the window's configuration table
    concatenated: int  # compatible, valid left/right pairs
    kept: int  # rows after filtering identical ones


@dataclass
class DPResult:
    schedule: Schedule
    cost: float
    stages: list[Stage] = field(default_factory=list)
    max_clique: int = 0

    @property
    def max_table(self) -> int:
        return max((s.kept for s in self.stages), default=0)


@dataclass
class _Option:
    status: int | None  # new start (None = not started yet)
    seg: tuple[int, int]  # slots covered inside the window
    ident: int  # DONE, LATER or running start


class _Row:
    __slots__ = ("cost", "starts")

    def __init__(self, cost: float, starts: tuple[int | None, ...]) -> None:
        self.cost = cost
        self.starts = starts


def _identity(job: Job, status: int | None, hi: int) -> int:
    if status is None:
        return LATER
    return DONE if status + job.width <= hi else status


def _tie_key(row: _Row, order: Sequence[int]) -> tuple[float, ...]:
    return tuple(math.inf if row.starts[k] is None else row.starts[k] for k in order)


class _Solver:
    def __init__(self, instance: Instance, decomposition: WindowDecomposition, restrict: bool,
                 check: bool, rng: random.Random | None) -> None:
        self.instance = instance
        self.jobs = list(instance.jobs)
        self.index = {j.id: k for k, j in enumerate(self.jobs)}
        self.dec = decomposition
        self.restrict = restrict
        self.check = check
        self.rng = rng
        self.id_order = sorted(range(len(self.jobs)), key=lambda k: self.jobs[k].id)
        self.m = max_overlap(self.jobs)
        self.wmax = max((j.width for j in self.jobs), default=1)
        top = sum(j.height for j in self.jobs)
        self.power = np.array([float(v) ** instance.alpha if v else 0.0 for v in range(top + 1)])

    def _starts_for(self, lo: int, hi: int) -> list[int] | None:
        if not self.restrict:
            return None
        reach = self.m * self.wmax
        return sorted(set(range(lo, min(hi, lo + reach))) | set(range(max(lo, hi - reach), hi)))

    def _options(self, job: Job, start: int | None, configs: list[tuple[int, int]],
                 lo: int, hi: int, first: int) -> list[_Option]:
        opts = []
        for cfg in configs:
            joined = concatenate(job, start, cfg, lo, hi)
            if joined is None or config_violations(joined[0], joined[1], job, first, hi):
                continue
            st, et = cfg
            status = start if start is not None else (st if st < hi else None)
            opts.append(_Option(status, (max(st, lo), min(et, hi)), _identity(job, status, hi)))
        opts.sort(key=lambda o: math.inf if o.status is None else o.status)
        return opts

    def _best_per_identity(self, option_sets: list[list[_Option]], heights: list[int],
                           lo: int, hi: int) -> dict[tuple[int, ...], tuple[float, tuple[int, ...]]]:
        """Cheapest choice of one option per job for every identity pattern."""
        length = hi - lo
        mats, codes, idents = [], [], []
        for opts, h in zip(option_sets, heights):
            mat = np.zeros((len(opts), length), dtype=np.int64)
            values = sorted({o.ident for o in opts})
            lookup = {v: c for c, v in enumerate(values)}
            for r, o in enumerate(opts):
                a, b = o.seg
                if b > a:
                    mat[r, a - lo:b - lo] = h
            mats.append(mat)
            codes.append(np.array([lookup[o.ident] for o in opts], dtype=np.int64))
            idents.append(values)
        radices = [len(v) for v in idents]
        counts = [len(o) for o in option_sets]
        best: dict[int, tuple[float, int, float]] = {}

        def expand(depth: int, base: np.ndarray, code: int, flat: int) -> None:
            rest = math.prod(counts[depth:])
            if rest * length > CHUNK_CELLS and depth < len(mats) - 1:
                for r in range(counts[depth]):
                    expand(depth + 1, base + mats[depth][r], code * radices[depth] + int(codes[depth][r]),
                           flat * counts[depth] + r)
                return
            loads = base[None, :]
            code_arr = np.array([code], dtype=np.int64)
            flat_arr = np.array([flat], dtype=np.int64)
            for d in range(depth, len(mats)):
                loads = (loads[:, None, :] + mats[d][None, :, :]).reshape(-1, length)
                code_arr = (code_arr[:, None] * radices[d] + codes[d][None, :]).reshape(-1)
                flat_arr = (flat_arr[:, None] * counts[d] + np.arange(counts[d])[None, :]).reshape(-1)
            window_cost = self.power[loads].sum(axis=1) if length else np.zeros(len(code_arr))
            tie = flat_arr.astype(float) if self.rng is None else np.array(
                [self.rng.random() for _ in range(len(flat_arr))])
            order = np.lexsort((tie, window_cost, code_arr))
            first = np.ones(len(order), dtype=bool)
            first[1:] = code_arr[order][1:] != code_arr[order][:-1]
            for k in order[first]:
                c, wc, tk = int(code_arr[k]), float(window_cost[k]), float(tie[k])
                held = best.get(c)
                if held is None or (wc, tk) < (held[0], held[2]):
                    best[c] = (wc, int(flat_arr[k]), tk)

        expand(0, np.zeros(length, dtype=np.int64), 0, 0)
        out = {}
        for c, (wc, flat, _) in best.items():
            choice = np.unravel_index(flat, counts) if counts else ()
            key = []
            for d in reversed(range(len(radices))):
                c, digit = divmod(c, radices[d])
                key.append(idents[d][digit])
            out[tuple(reversed(key))] = (wc, tuple(int(x) for x in choice))
        return out

    def _offer(self, table: dict, key: tuple[int, ...], row: _Row) -> None:
        held = table.get(key)
        if held is None:
            table[key] = row
            return
        if close(row.cost, held.cost, 1e-12):
            if self.rng is not None:
                if self.rng.random() < 0.5:
                    table[key] = row
            elif _tie_key(row, self.id_order) < _tie_key(held, self.id_order):
                table[key] = row
        elif row.cost < held.cost:
            table[key] = row

    def _assert_rows_valid(self, rows: list[_Row], first: int, hi: int) -> None:
        for row in rows:
            for job, start in zip(self.jobs, row.starts):
                st, et = left_config(job, start, hi)
                assert not config_violations(st, et, job, first, hi), (job.id, st, et)

    def solve(self) -> DPResult:
        b = self.dec.boundaries
        first = b[0]
        rows = [_Row(0.0, tuple(None for _ in self.jobs))]
        stages = []
        for (lo, hi), members in zip(self.dec.windows, self.dec.clique_jobs):
            ks = [self.index[i] for i in members]
            wjobs = [self.jobs[k] for k in ks]
            starts = self._starts_for(lo, hi)
            configs = [list_configurations(j, lo, hi, starts) for j in wjobs]
            listed = math.prod(len(c) for c in configs)
            cache: dict[tuple[int, int | None], list[_Option]] = {}
            table: dict[tuple[int, ...], _Row] = {}
            concatenated = 0
            for row in rows:
                option_sets = []
                for k, j, cfgs in zip(ks, wjobs, configs):
                    key = (k, row.starts[k])
                    if key not in cache:
                        cache[key] = self._options(j, row.starts[k], cfgs, lo, hi, first)
                    option_sets.append(cache[key])
                if any(not o for o in option_sets):
                    continue
                concatenated += math.prod(len(o) for o in option_sets)
                # jobs outside the window must already be settled for this boundary
                if any(
                    config_violations(*left_config(self.jobs[k], s, hi), self.jobs[k], first, hi)
                    for k, s in enumerate(row.starts) if k not in ks
                ):
                    continue
                winners = self._best_per_identity(option_sets, [j.height for j in wjobs], lo, hi)
                for ident, (wc, choice) in winners.items():
                    new = list(row.starts)
                    for k, opts, c in zip(ks, option_sets, choice):
                        new[k] = opts[c].status
                    self._offer(table, ident, _Row(row.cost + wc, tuple(new)))
            rows = list(table.values())
            if self.check:
                self._assert_rows_valid(rows, first, hi)
            stages.append(Stage((lo, hi), len(ks), listed, concatenated, len(rows)))
        last = b[-1]
        final = [r for r in rows if all(
            s is not None and s + j.width <= last for j, s in zip(self.jobs, r.starts))]
        if not final:
            raise InfeasibleInstance("no configuration completes every job")
        best = final[0]
        for r in final[1:]:
            if r.cost < best.cost and not close(r.cost, best.cost, 1e-12):
                best = r
            elif close(r.cost, best.cost, 1e-12) and self.rng is None and \
                    _tie_key(r, self.id_order) < _tie_key(best, self.id_order):
                best = r
        schedule = Schedule({j.id: s for j, s in zip(self.jobs, best.starts)})
        return DPResult(schedule, best.cost, stages, self.m)


def solve_windows(instance: Instance, decomposition: WindowDecomposition, restrict: bool = False,
                  check: bool = False, rng: random.Random | None = None) -> DPResult:
    return _Solver(instance, decomposition, restrict, check, rng).solve()

