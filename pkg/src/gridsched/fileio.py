"""JSON formats for instances, schedules and slot-set jobs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import Instance, Job, Schedule
from .errors import InvalidJob


def instance_from_dict(data: dict[str, Any], alpha: float | None = None) -> Instance:
    try:
        jobs = [
            Job(str(j["id"]), j["release"], j["deadline"], j["width"], j["height"])
            for j in data["jobs"]
        ]
        a = data.get("alpha") if alpha is None else alpha
    except (KeyError, TypeError) as exc:
        raise InvalidJob(f"malformed instance: {exc}") from exc
    if a is None:
        raise InvalidJob("instance has no alpha and none was given")
    return Instance(tuple(jobs), a)


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    return {
        "alpha": instance.alpha,
        "jobs": [
            {"id": j.id, "release": j.release, "deadline": j.deadline, "width": j.width, "height": j.height}
            for j in instance.jobs
        ],
    }


def schedule_from_dict(data: dict[str, Any]) -> Schedule:
    try:
        return Schedule({str(k): v for k, v in data["assignments"].items()})
    except (KeyError, AttributeError) as exc:
        raise InvalidJob(f"malformed schedule: {exc}") from exc


def schedule_to_dict(schedule: Schedule) -> dict[str, Any]:
    return {"assignments": dict(schedule.assignments)}


def slot_jobs_from_dict(data: dict[str, Any]) -> list[tuple[str, frozenset[int]]]:
    return [(str(j["id"]), frozenset(j["slots"])) for j in data["jobs"]]


def slot_jobs_to_dict(jobs: list[tuple[str, frozenset[int]]]) -> dict[str, Any]:
    return {"model": "slot-set", "jobs": [{"id": i, "slots": sorted(s)} for i, s in jobs]}


def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str | Path, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=False)
        fh.write("\n")


def load_instance(path: str | Path, alpha: float | None = None) -> Instance:
    return instance_from_dict(read_json(path), alpha)


def load_schedule(path: str | Path) -> Schedule:
    return schedule_from_dict(read_json(path))
