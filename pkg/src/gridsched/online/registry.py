"""Name-based construction of online algorithms for the CLI, harness and adversaries."""

from __future__ import annotations

from ..core import Instance, Schedule
from .general import GeneralPolicy, alg_general
from .horizontal import FIRST_FIT, NEXT_FIT, ADPolicy, UUPolicy, alg_ad, alg_uu
from .uniform import UVPolicy, alg_uv
from .vertical import VPolicy, alg_v

ALGORITHMS = ("v", "uv", "general", "uu", "ad-nextfit", "ad-firstfit")
REFERENCES = ("avr", "bkp", "yds")


def make_policy(name: str, reference: str = "bkp", base: float = 2):
    """A fresh policy object; only rules that need no lookahead are available here."""
    if name == "v":
        if reference == "yds":
            raise ValueError("the yds reference needs the whole instance; use run_algorithm")
        return VPolicy(reference)
    if name == "uv":
        return UVPolicy()
    if name == "general":
        return GeneralPolicy(base)
    if name == "uu":
        return UUPolicy()
    if name == "ad-nextfit":
        return ADPolicy(NEXT_FIT)
    if name == "ad-firstfit":
        return ADPolicy(FIRST_FIT)
    raise ValueError(f"unknown algorithm {name!r}")


def run_algorithm(name: str, instance: Instance, reference: str = "bkp", base: float = 2) -> Schedule:
    if name == "v":
        return alg_v(instance, reference)
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
