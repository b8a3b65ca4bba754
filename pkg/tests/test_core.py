from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import jobs_strategy
from gridsched.core import (
    Instance, Job, Schedule, avg_profile, ceil_div, class_width, classify_width, cost, edf_order,
    is_agreeable, load_profile, partition_slots, schedule_cost, validate_schedule,
)
from gridsched.errors import InfeasibleAssignment, InvalidAlpha, InvalidJob, UnassignedJob
from gridsched.exact import alg_e


def test_stacked_profile_and_cost(stacked):
    sched = Schedule({"J1": 0, "J2": 1})
    assert load_profile(stacked, sched) == [1, 2, 1]
    assert cost([1, 2, 1], 2) == 6
    assert validate_schedule(stacked, sched) == []


def test_minmax_placement_cost(minmax):
    # J3 at 0 stacks on J1: load 2 on four slots then the tall unit job
    sched = Schedule({"J1": 0, "J2": 4, "J3": 0})
    assert cost(load_profile(minmax, sched), 2) == 25


def test_empty_and_single_profiles():
    assert load_profile(Instance((), 2), Schedule({})) == []
    inst = Instance((Job("a", 0, 10, 2, 3),), 2)
    assert load_profile(inst, Schedule({"a": 5})) == [0] * 5 + [3, 3] + [0] * 3
    assert cost([0, 0, 0], 2) == 0


def test_cost_restricted_to_slots():
    assert cost([1, 2, 3], 2, slots=[0, 2]) == 10


@pytest.mark.parametrize("alpha", [1, 0.5, float("inf"), "2"])
def test_bad_alpha(alpha):
    with pytest.raises(InvalidAlpha):
        cost([1], alpha)


@pytest.mark.parametrize("args", [(0, 0, 1, 1), (0, 3, 4, 1), (0, 3, 0, 1), (0, 3, 1, 0), (-1, 3, 1, 1), (0.5, 3, 1, 1)])
def test_job_invariants(args):
    with pytest.raises(InvalidJob):
        Job("x", *args)


def test_duplicate_ids_rejected():
    with pytest.raises(InvalidJob):
        Instance((Job("a", 0, 2, 1, 1), Job("a", 0, 2, 1, 1)), 2)


def test_load_profile_errors(stacked):
    with pytest.raises(UnassignedJob):
        load_profile(stacked, Schedule({"J1": 0}))
    with pytest.raises(InfeasibleAssignment):
        load_profile(stacked, Schedule({"J1": 1, "J2": 1}))


def test_validate_reports_each_rule():
    inst = Instance((Job("a", 0, 3, 3, 1), Job("b", 2, 5, 1, 1)), 2)
    assert any("after deadline" in p for p in validate_schedule(inst, Schedule({"a": 1, "b": 2})))
    assert any("missing" in p for p in validate_schedule(inst, Schedule({"a": 0})))
    assert any("before release" in p for p in validate_schedule(inst, Schedule({"a": 0, "b": 1})))
    assert any("not a job" in p for p in validate_schedule(inst, Schedule({"a": 0, "b": 2, "z": 0})))


def test_avg_examples():
    four = Instance(tuple(Job(f"j{i}", 0, 5, 3, 1) for i in range(4)), 2)
    assert avg_profile(four) == [Fraction(12, 5)] * 5
    assert avg_profile(Instance((Job("a", 0, 4, 2, 2),), 2)) == [1, 1, 1, 1]
    split = Instance((Job("a", 0, 2, 1, 1), Job("b", 3, 5, 2, 3)), 2)
    assert avg_profile(split) == [Fraction(1, 2), Fraction(1, 2), 0, 3, 3]


def test_partition_examples():
    above, below = partition_slots([Fraction(12, 5)] * 5, 1)
    assert above == frozenset(range(5)) and below == frozenset()
    assert partition_slots([0, 0], 3) == (frozenset(), frozenset({0, 1}))
    assert partition_slots([0.5, 1.5], 1) == (frozenset({1}), frozenset({0}))


@pytest.mark.parametrize("w,p", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)])
def test_classify_width(w, p):
    assert classify_width(w) == p
    assert class_width(p) >= w


def test_classify_other_base():
    assert classify_width(3, base=3) == 1
    assert classify_width(4, base=3) == 2
    assert class_width(2, base=1.5) == 3


def test_edf_order():
    jobs = [Job("a", 0, 5, 1, 1), Job("b", 0, 3, 1, 1), Job("c", 0, 7, 1, 1)]
    assert [j.deadline for j in edf_order(jobs)] == [3, 5, 7]
    tied = [Job("z", 1, 5, 1, 1), Job("y", 0, 5, 1, 1), Job("x", 1, 5, 1, 1)]
    assert [j.id for j in edf_order(tied)] == ["y", "x", "z"]
    assert edf_order([]) == []


def test_agreeable():
    assert is_agreeable([Job("a", 0, 4, 1, 1), Job("b", 1, 5, 1, 1), Job("c", 1, 5, 1, 1)])
    assert not is_agreeable([Job("a", 0, 6, 1, 1), Job("b", 1, 5, 1, 1)])
    assert is_agreeable([Job("a", 0, 6, 1, 1), Job("b", 0, 5, 1, 1)])  # shared release


def test_ceil_div_exact():
    assert ceil_div(Fraction(4, 5), 1) == 1
    assert ceil_div(Fraction(6, 1), 3) == 2
    assert ceil_div(0, 2) == 0


@given(jobs_strategy(), st.data())
def test_cost_monotone_and_partition_exact(jobs, data):
    inst = Instance(jobs, 2)
    starts = {j.id: data.draw(st.integers(j.release, j.latest_start)) for j in jobs}
    full = schedule_cost(inst, Schedule(starts))
    smaller = Instance(jobs[:-1], 2)
    assert schedule_cost(smaller, Schedule({k: v for k, v in starts.items() if k != jobs[-1].id})) <= full
    h = data.draw(st.integers(1, 4))
    above, below = partition_slots(avg_profile(inst), h)
    loads = load_profile(inst, Schedule(starts))
    assert abs(cost(loads, 2, above) + cost(loads, 2, below) - full) < 1e-9


@given(jobs_strategy(n_max=4, tau=8))
def test_convexity_lower_bound(jobs):
    inst = Instance(jobs, 2.5)
    _, best = alg_e(inst)
    assert best >= sum(j.width * j.height**2.5 for j in jobs) - 1e-9
