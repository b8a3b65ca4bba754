import itertools
import random

import pytest
from hypothesis import given

from conftest import jobs_strategy, minmax_instance, random_instance, stacked_instance
from gridsched.core import Instance, Job, close, schedule_cost, validate_schedule
from gridsched.errors import EmptyInstance, NotUnitWidth, TooLarge
from gridsched.exact import (
    alg_e, alg_eplus, alg_unit_exact, brute_force, concatenate, config_violations, list_configurations,
    max_overlap, maximal_cliques, pair_windows, run_e, run_eplus, run_unit, slot_brute_force, slot_optimum,
    window_decomposition_e, window_decomposition_eplus,
)
from gridsched.online import SlotJob


def _inst(*jobs, alpha=2):
    return Instance(tuple(jobs), alpha)


ABC_SPLIT = (Job("A", 0, 4, 1, 1), Job("B", 1, 3, 1, 1), Job("C", 5, 7, 1, 1))
ABC_CHAIN = (Job("A", 0, 3, 1, 1), Job("B", 2, 5, 1, 1), Job("C", 4, 7, 1, 1))


# windows -----------------------------------------------------------------------


def test_e_windows_examples():
    split = window_decomposition_e(_inst(*ABC_SPLIT))
    assert split.boundaries == (0, 5, 7)
    assert [set(c) for c in split.clique_jobs] == [{"A", "B"}, {"C"}]
    chain = window_decomposition_e(_inst(*ABC_CHAIN))
    assert chain.boundaries == (0, 4, 7)
    assert [set(c) for c in chain.clique_jobs] == [{"A", "B"}, {"B", "C"}]
    assert window_decomposition_e(_inst(Job("a", 2, 6, 1, 1))).windows == [(2, 6)]


def test_eplus_windows_examples():
    two = window_decomposition_eplus(_inst(Job("a", 0, 4, 1, 1), Job("b", 1, 3, 1, 1)))
    assert two.boundaries == (0, 1, 3, 4)
    assert window_decomposition_eplus(_inst(Job("a", 2, 6, 1, 1))).windows == [(2, 6)]


def test_pair_windows_even_horizon():
    dec = pair_windows(_inst(Job("a", 0, 5, 1, 1)))
    assert dec.boundaries == (0, 2, 4, 6)


@pytest.mark.parametrize("fn", [window_decomposition_e, window_decomposition_eplus, pair_windows])
def test_empty_decomposition(fn):
    with pytest.raises(EmptyInstance):
        fn(_inst())


def _pairwise_meet(jobs):
    return all(a.release < b.deadline and b.release < a.deadline for a, b in itertools.combinations(jobs, 2))


@given(jobs_strategy(n_max=7, tau=12))
def test_window_structure(jobs):
    inst = _inst(*jobs)
    by_id = {j.id: j for j in jobs}
    m = max_overlap(jobs)
    e = window_decomposition_e(inst)
    ep = window_decomposition_eplus(inst)
    for dec in (e, ep):
        assert list(dec.boundaries) == sorted(set(dec.boundaries))
        for members in dec.clique_jobs:
            assert len(members) <= m
            assert _pairwise_meet([by_id[i] for i in members])
    assert set(e.boundaries) <= set(ep.boundaries)  # every E window is a union of E+ windows
    points = {j.release for j in jobs} | {j.deadline for j in jobs}
    assert all(not (lo < p < hi) for lo, hi in ep.windows for p in points)
    assert len(maximal_cliques(jobs)) == len(e)


# configurations ------------------------------------------------------------------


def test_config_rules():
    job = Job("a", 2, 8, 3, 1)
    assert config_violations(5, 8, job, 4, 7) == []  # starts inside, still running after the window
    assert 1 in config_violations(5, 5, job, 4, 7)
    assert 2 in config_violations(3, 8, job, 4, 7)  # would need more than its width
    assert config_violations(5, 7, job, 4, 7) == [3]  # closed segment shorter than the job
    late = Job("b", 5, 9, 2, 1)
    assert 4 in config_violations(4, 6, late, 4, 7)
    early = Job("c", 0, 6, 3, 1)
    assert 5 in config_violations(4, 8, early, 4, 7)


def test_list_configurations_restricted():
    job = Job("a", 0, 10, 2, 1)
    full = list_configurations(job, 2, 6)
    some = list_configurations(job, 2, 6, starts=[2])
    assert set(some) < set(full)
    assert {st for st, _ in some} == {1, 2, 6}  # sentinels always kept


def test_concatenate_types():
    job = Job("a", 0, 10, 3, 1)
    assert concatenate(job, 0, (3, 4), 4, 8) == (0, 3)  # finished before
    assert concatenate(job, 0, (4, 5), 4, 8) is None
    assert concatenate(job, 2, (3, 5), 4, 8) == (2, 5)  # running across the boundary
    assert concatenate(job, None, (5, 8), 4, 8) == (5, 8)  # not yet started
    assert concatenate(job, None, (3, 5), 4, 8) is None


# optima --------------------------------------------------------------------------


def test_worked_values():
    for solver in (alg_e, alg_eplus, brute_force):
        assert solver(stacked_instance())[1] == pytest.approx(6, abs=1e-9)
    sched, best = alg_eplus(minmax_instance())
    assert best == pytest.approx(23, abs=1e-9)
    assert sched.start("J3") == 4
    assert alg_e(minmax_instance())[1] == pytest.approx(23, abs=1e-9)


def test_single_job_ties_to_release():
    inst = _inst(Job("a", 3, 9, 2, 2), alpha=3)
    for solver in (alg_e, alg_eplus):
        sched, best = solver(inst)
        assert sched.start("a") == 3 and best == 2 * 2**3
    assert brute_force(inst)[1] == 16


def test_unit_exact_examples():
    assert alg_unit_exact(_inst(Job("a", 0, 1, 1, 3)))[1] == 9
    sched, best = alg_unit_exact(_inst(Job("a", 0, 2, 1, 2), Job("b", 0, 2, 1, 2)))
    assert best == 8 and sched.start("a") != sched.start("b")
    with pytest.raises(NotUnitWidth):
        alg_unit_exact(_inst(Job("a", 0, 3, 2, 1)))


def test_empty_instance_costs_nothing():
    for runner in (run_e, run_eplus, run_unit):
        assert runner(_inst()).cost == 0


def test_brute_force_cap():
    with pytest.raises(TooLarge):
        brute_force(_inst(*(Job(f"j{i}", 0, 50, 1, 1) for i in range(5))), cap=1000)


@pytest.mark.parametrize("seed", range(40))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    for _ in range(5):
        inst = random_instance(rng)
        _, ref = brute_force(inst)
        for res in (run_e(inst, check=True), run_eplus(inst, check=True)):
            assert close(res.cost, ref)
            assert validate_schedule(inst, res.schedule) == []
            assert close(schedule_cost(inst, res.schedule), res.cost)


@pytest.mark.parametrize("seed", range(40))
def test_unit_matches_brute_force(seed):
    rng = random.Random(1000 + seed)
    for _ in range(5):
        inst = random_instance(rng, n_max=7, unit=True)
        res = run_unit(inst, check=True)
        assert close(res.cost, brute_force(inst)[1])
        assert validate_schedule(inst, res.schedule) == []


@pytest.mark.parametrize("seed", range(10))
def test_tie_break_does_not_change_cost(seed):
    rng = random.Random(500 + seed)
    inst = random_instance(rng, alphas=(2,))
    base = alg_e(inst)[1]
    for k in range(3):
        assert close(alg_e(inst, rng=random.Random(k))[1], base)
        assert close(alg_eplus(inst, rng=random.Random(k))[1], base)


def test_table_exceeds_wmax_power_m():
    # unit jobs, so only "done" and "not started" identities exist for a continuing job
    inst = _inst(Job("A", 0, 1, 1, 1), Job("B", 0, 3, 1, 1), Job("C", 2, 3, 1, 1))
    res = run_e(inst)
    assert res.max_clique == 2
    assert res.max_table == 2 > 1**2


@pytest.mark.parametrize("seed", range(20))
def test_table_within_identity_count(seed):
    rng = random.Random(2000 + seed)
    for _ in range(5):
        inst = random_instance(rng)
        wmax = max(j.width for j in inst.jobs)
        for res in (run_e(inst), run_eplus(inst)):
            assert res.max_table <= (wmax + 1) ** res.max_clique


# slot-set oracle -----------------------------------------------------------------


def test_slot_optimum_matching_and_fallback():
    jobs = [SlotJob("a", frozenset({1, 2})), SlotJob("b", frozenset({1}))]
    assignment, best = slot_optimum(jobs)
    assert best == 2 and assignment == {"a": 2, "b": 1}
    crowded = [SlotJob(f"j{i}", frozenset({1, 2})) for i in range(3)]
    assert slot_optimum(crowded)[1] == slot_brute_force(crowded)[1] == 5
