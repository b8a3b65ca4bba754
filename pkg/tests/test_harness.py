import math

import pytest
from hypothesis import given, strategies as st

from conftest import stacked_instance
from gridsched.bounds import general_ratio, log_spread, ratio_bound, uu_ratio, v_bkp_ratio, v_yds_ratio
from gridsched.core import Job, is_agreeable
from gridsched.errors import UnsatisfiableConstraint
from gridsched.harness import CONSTRAINTS, CSV_COLUMNS, GeneratorSpec, compare, generate, ratio_of


def test_generate_is_deterministic():
    spec = GeneratorSpec(seed=7, count=20, n=5, tau=12)
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(GeneratorSpec(seed=8, count=20, n=5, tau=12))


@pytest.mark.parametrize("constraint", CONSTRAINTS)
@given(seed=st.integers(0, 10**6))
def test_generated_jobs_respect_class(constraint, seed):
    spec = GeneratorSpec(seed=seed, count=5, n=6, tau=12, width=(1, 4), height=(1, 3), constraint=constraint)
    for inst in generate(spec):
        jobs = inst.jobs
        assert 1 <= len(jobs) <= 6 and all(j.deadline <= 12 for j in jobs)
        if constraint in ("unit-width", "unit-uniform-height"):
            assert {j.width for j in jobs} == {1}
        if constraint == "uniform-width":
            assert len({j.width for j in jobs}) == 1
        if constraint in ("unit-uniform-height", "agreeable", "same-release", "same-deadline"):
            assert len({j.height for j in jobs}) == 1
        if constraint == "agreeable":
            assert all(a.deadline <= b.deadline for a in jobs for b in jobs if a.release <= b.release and a.release < b.release)
            assert is_agreeable(jobs)
        if constraint == "same-release":
            assert len({j.release for j in jobs}) == 1
        if constraint == "same-deadline":
            assert len({j.deadline for j in jobs}) == 1


@pytest.mark.parametrize("spec", [
    GeneratorSpec(width=(5, 6), tau=4),
    GeneratorSpec(width=(3, 1)),
    GeneratorSpec(height=(0, 2)),
    GeneratorSpec(constraint="sorted"),
])
def test_unsatisfiable(spec):
    with pytest.raises(UnsatisfiableConstraint):
        generate(spec)


def test_compare_empty_and_exact_only():
    assert compare([], ["uu"]).rows == []
    report = compare([stacked_instance()], ["exact"])
    (row,) = report.rows
    assert row.ratio == 1.0 and row.cost == row.opt_cost == 6 and not row.violated


def test_csv_layout_and_json():
    spec = GeneratorSpec(seed=1, count=5, n=4, tau=8, constraint="unit-uniform-height")
    report = compare(generate(spec), ["uu", "v-bkp"], "brute", seed=1)
    lines = report.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 10
    agg = report.aggregate()
    assert set(agg["algorithms"]) == {"uu", "v-bkp"}
    assert agg["algorithms"]["uu"]["bound"] == uu_ratio(2) == 33
    assert '"opt_method": "brute"' in report.to_json()


def test_uu_sweep_has_no_violations():
    spec = GeneratorSpec(seed=11, count=1000, n=6, tau=10, width=(1, 1), height=(1, 1), constraint="unit-uniform-height")
    report = compare(generate(spec), ["uu"], "unit")
    assert report.violations() == []
    assert report.slot_violations["uu"] == 0
    assert all(r.ratio >= 1 - 1e-9 for r in report.rows)


def test_bound_formulas():
    assert v_yds_ratio(2) == 8
    assert v_bkp_ratio(2) == pytest.approx(4 * (8 * math.e**2 + 1))
    jobs = [Job("a", 0, 9, 1, 1), Job("b", 0, 9, 5, 1)]
    assert log_spread(jobs) == 3
    assert log_spread(jobs[:1]) == 1
    assert general_ratio(2, jobs) == pytest.approx((36 * 3) ** 2 * (8 * math.e**2 + 1))
    assert ratio_bound("exact", 2) == 1 and math.isinf(ratio_bound("nonsense", 2))


def test_ratio_of_zero_opt():
    assert ratio_of(0, 0) == 1.0
    assert math.isinf(ratio_of(1, 0))
