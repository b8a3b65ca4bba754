"""Competitive-ratio guarantees as functions of alpha (and the width spread where relevant)."""

from __future__ import annotations

import math
from typing import Sequence

from .core import Job

E = math.e


def bkp_ratio(alpha: float) -> float:
    return 8 * E**alpha


def avr_ratio(alpha: float) -> float:
    return (2 * alpha) ** alpha / 2


def v_yds_ratio(alpha: float) -> float:
    return 2 ** (alpha + 1)


def v_ratio(alpha: float, reference_ratio: float) -> float:
    return 2**alpha * (reference_ratio + 1)


def v_bkp_ratio(alpha: float) -> float:
    return v_ratio(alpha, bkp_ratio(alpha))


def v_avr_ratio(alpha: float) -> float:
    return v_ratio(alpha, avr_ratio(alpha))


def uv_ratio(alpha: float) -> float:
    return 12**alpha * (bkp_ratio(alpha) + 1)


def log_spread(jobs: Sequence[Job]) -> int:
    """ceil(log2(wmax / wmin)), floored at 1."""
    if not jobs:
        return 1
    k = max(j.width for j in jobs) / min(j.width for j in jobs)
    return max(1, math.ceil(math.log2(k) - 1e-12))


def general_ratio(alpha: float, jobs: Sequence[Job]) -> float:
    return (36 * log_spread(jobs)) ** alpha * (bkp_ratio(alpha) + 1)


def uu_ratio(alpha: float) -> float:
    return (4 * alpha) ** alpha / 2 + 1


def ad_nextfit_ratio(alpha: float) -> float:
    return (12 * alpha) ** alpha / 2 + 1


def ad_firstfit_ratio(alpha: float) -> float:
    return (8 * alpha) ** alpha / 2 + 1


def lambda_lower_bound(alpha: float, wmax: int, wmin: int) -> float:
    return (math.log2(wmax / wmin) / 3) ** alpha


def ratio_bound(algorithm: str, alpha: float, jobs: Sequence[Job] = ()) -> float:
    """Guarantee for a CLI algorithm name; ``inf`` where none is claimed."""
    table = {
        "v-yds": v_yds_ratio,
        "v-bkp": v_bkp_ratio,
        "v-avr": v_avr_ratio,
        "uv": uv_ratio,
        "uu": uu_ratio,
        "ad-nextfit": ad_nextfit_ratio,
        "ad-firstfit": ad_firstfit_ratio,
    }
    if algorithm == "general":
        return general_ratio(alpha, jobs)
    if algorithm in table:
        return table[algorithm](alpha)
    if algorithm == "exact":
        return 1.0
    return math.inf
