import random

import pytest
from hypothesis import settings, strategies as st

from gridsched.core import Instance, Job

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def stacked_instance(alpha: float = 2) -> Instance:
    """One long job plus a unit job pinned in its middle slot."""
    return Instance((Job("J1", 0, 3, 3, 1), Job("J2", 1, 2, 1, 1)), alpha)


def minmax_instance(alpha: float = 2) -> Instance:
    """Min-sum and min-max optima disagree here."""
    return Instance((Job("J1", 0, 4, 4, 1), Job("J2", 4, 5, 1, 3), Job("J3", 0, 8, 4, 1)), alpha)


def random_instance(rng: random.Random, n_max: int = 6, tau_max: int = 10, w_max: int = 4, h_max: int = 3,
                    alphas=(1.5, 2, 3), unit: bool = False) -> Instance:
    n = rng.randint(1, n_max)
    tau = rng.randint(4, tau_max)
    jobs = []
    for i in range(n):
        w = 1 if unit else rng.randint(1, min(w_max, tau))
        r = rng.randint(0, tau - w)
        d = rng.randint(r + w, tau)
        jobs.append(Job(f"j{i}", r, d, w, rng.randint(1, h_max)))
    return Instance(tuple(jobs), rng.choice(alphas))


@st.composite
def jobs_strategy(draw, n_max: int = 5, tau: int = 10, w_max: int = 4, h_max: int = 3, unit: bool = False):
    n = draw(st.integers(1, n_max))
    jobs = []
    for i in range(n):
        w = 1 if unit else draw(st.integers(1, w_max))
        r = draw(st.integers(0, tau - w))
        d = draw(st.integers(r + w, tau))
        jobs.append(Job(f"j{i}", r, d, w, draw(st.integers(1, h_max))))
    return tuple(jobs)


@pytest.fixture
def stacked():
    return stacked_instance()


@pytest.fixture
def minmax():
    return minmax_instance()
