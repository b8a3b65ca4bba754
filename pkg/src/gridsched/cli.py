"""Command-line entry point: solve, exact, adversary, bench and validate."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .adversary import adversary_lambda, greedy_adversary, greedy_run_cost, lambda_opt_schedule
from .core import schedule_cost, validate_schedule
from .errors import GridSchedError
from .exact import brute_force, run_e, run_eplus, run_unit
from .fileio import load_instance, load_schedule, read_json, schedule_to_dict, slot_jobs_from_dict, write_json
from .harness import GeneratorSpec, compare, generate
from .online.greedy import SlotJob, greedy, slot_cost
from .online.registry import ALGORITHMS, REFERENCES, run_algorithm


class UsageError(Exception):
    pass


def _emit(payload: dict, out: str | None) -> None:
    if out:
        write_json(out, payload)
    else:
        print(json.dumps(payload, sort_keys=True))


def _solve_slot_set(args: argparse.Namespace) -> int:
    alpha = 2.0 if args.alpha is None else args.alpha
    jobs = [SlotJob(i, slots) for i, slots in slot_jobs_from_dict(read_json(args.instance))]
    assignment = greedy(jobs)
    total = slot_cost(assignment, alpha)
    _emit({"assignments": assignment, "algorithm": "greedy", "cost": total}, args.out)
    print(f"greedy: cost {total:g} over {len(assignment)} jobs")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    if args.alg == "greedy":
        return _solve_slot_set(args)
    instance = load_instance(args.instance, args.alpha)
    schedule = run_algorithm(args.alg, instance, args.reference, args.class_base)
    total = schedule_cost(instance, schedule)
    _emit({**schedule_to_dict(schedule), "algorithm": args.alg, "cost": total}, args.out)
    print(f"{args.alg}: cost {total:g} over {len(schedule)} jobs")
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance, args.alpha)
    stats: dict = {}
    if args.method == "brute":
        schedule, total = brute_force(instance)
    else:
        res = {"e": run_e, "eplus": run_eplus, "unit": run_unit}[args.method](instance)
        schedule, total = res.schedule, res.cost
        stats = {"windows": len(res.stages), "max_clique": res.max_clique, "max_table": res.max_table}
    _emit({**schedule_to_dict(schedule), "method": args.method, "cost": total, **stats}, args.out)
    print(f"{total:g}")
    return 0


def cmd_adversary(args: argparse.Namespace) -> int:
    if args.type == "lambda":
        if args.x is None:
            raise UsageError("--x is required for --type lambda")
        tr = adversary_lambda(args.algorithm, args.alpha, args.x, args.class_base)
        _, opt = lambda_opt_schedule(tr)
        payload = {**tr.to_dict(), "constructed_opt": opt}
        _emit(payload, args.out)
        print(f"alg {tr.alg_cost:g} / opt bound {tr.opt_bound:g} = {tr.ratio:.6g} (lower bound {tr.lower_bound:.6g})")
        return 0
    if args.k is None:
        raise UsageError("--k is required for --type greedy")
    adv = greedy_adversary(args.k, args.alpha)
    alg = greedy_run_cost(adv, args.alpha)
    payload = {"k": adv.k, "jobs": len(adv.jobs), "greedy": alg, "opt": adv.expected_opt, "ratio": alg / adv.expected_opt}
    _emit(payload, args.out)
    print(f"greedy {alg:g} / opt {adv.expected_opt:g}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    spec = GeneratorSpec.from_dict(read_json(args.spec))
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    report = compare(generate(spec), algorithms, args.opt, seed=spec.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.csv").write_text(report.to_csv(), encoding="utf-8")
    (out / "summary.json").write_text(report.to_json() + "\n", encoding="utf-8")
    bad = len(report.violations())
    print(f"{len(report.rows)} rows, {bad} bound violations, written to {out}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance, args.alpha)
    schedule = load_schedule(args.schedule)
    problems = validate_schedule(instance, schedule)
    for p in problems:
        print(p)
    if problems:
        print(f"{len(problems)} violations")
        return 1
    print(f"valid, cost {schedule_cost(instance, schedule):g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridsched", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run an online algorithm")
    p.add_argument("--alg", required=True, choices=ALGORITHMS + ("greedy",),
                   help="greedy reads a slot-set job file")
    p.add_argument("--instance", required=True)
    p.add_argument("--reference", default="bkp", choices=REFERENCES)
    p.add_argument("--class-base", type=float, default=2)
    p.add_argument("--alpha", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="run an exact method")
    p.add_argument("--method", default="e", choices=("e", "eplus", "unit", "brute"))
    p.add_argument("--instance", required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("adversary", help="play a lower-bound construction")
    p.add_argument("--type", required=True, choices=("lambda", "greedy"))
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--x", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--algorithm", default="general", choices=ALGORITHMS)
    p.add_argument("--class-base", type=float, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("bench", help="seeded sweep against an exact optimum")
    p.add_argument("--spec", required=True)
    p.add_argument("--algorithms", required=True, help="comma-separated, e.g. uu,v-bkp,exact")
    p.add_argument("--opt", default="e", choices=("e", "eplus", "brute", "unit"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="check a schedule against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (GridSchedError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
