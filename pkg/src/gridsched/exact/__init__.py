"""Exact solvers: the window DP in three flavours and brute-force oracles."""

from __future__ import annotations

import random

from ..core import Instance, Schedule
from ..errors import NotUnitWidth
from .brute import DEFAULT_CAP, brute_force, search_space, slot_brute_force, slot_optimum
from .dp import (
    DPResult, Stage, concatenate, config_violations, left_config, list_configurations, solve_windows,
)
from .windows import (
    WindowDecomposition, max_overlap, maximal_cliques, pair_windows, window_decomposition_e,
    window_decomposition_eplus,
)


def _empty(instance: Instance) -> DPResult | None:
    return DPResult(Schedule({}), 0.0) if not instance.jobs else None


def run_e(instance: Instance, decomposition: WindowDecomposition | None = None, **kw) -> DPResult:
    if (res := _empty(instance)) is not None:
        return res
    dec = window_decomposition_e(instance) if decomposition is None else decomposition
    return solve_windows(instance, dec, **kw)


def run_eplus(instance: Instance, **kw) -> DPResult:
    if (res := _empty(instance)) is not None:
        return res
    return solve_windows(instance, window_decomposition_eplus(instance), restrict=True, **kw)


def run_unit(instance: Instance, **kw) -> DPResult:
    for job in instance.jobs:
        if job.width != 1:
            raise NotUnitWidth(f"job {job.id!r} has width {job.width}")
    if (res := _empty(instance)) is not None:
        return res
    return solve_windows(instance, pair_windows(instance), **kw)


def alg_e(instance: Instance, decomposition: WindowDecomposition | None = None,
          rng: random.Random | None = None) -> tuple[Schedule, float]:
    res = run_e(instance, decomposition, rng=rng)
    return res.schedule, res.cost


def alg_eplus(instance: Instance, rng: random.Random | None = None) -> tuple[Schedule, float]:
    res = run_eplus(instance, rng=rng)
    return res.schedule, res.cost


def alg_unit_exact(instance: Instance, rng: random.Random | None = None) -> tuple[Schedule, float]:
    res = run_unit(instance, rng=rng)
    return res.schedule, res.cost


METHODS = {"e": run_e, "eplus": run_eplus, "unit": run_unit}

__all__ = [
    "DEFAULT_CAP", "DPResult", "METHODS", "Stage", "WindowDecomposition", "alg_e", "alg_eplus",
    "alg_unit_exact", "brute_force", "concatenate", "config_violations", "left_config",
    "list_configurations", "max_overlap", "maximal_cliques", "pair_windows", "run_e", "run_eplus",
    "run_unit", "search_space", "slot_brute_force", "slot_optimum", "solve_windows",
    "window_decomposition_e", "window_decomposition_eplus",
]
