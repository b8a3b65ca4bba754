"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GridSchedError(Exception):
    """Base class for domain errors (mapped to CLI exit code 1)."""


class InvalidJob(GridSchedError, ValueError):
    pass


class InvalidAlpha(GridSchedError, ValueError):
    pass


class UnassignedJob(GridSchedError):
    def __init__(self, job_id: str) -> None:
        super().__init__(f"job {job_id!r} has no start time")
        self.job_id = job_id


class InfeasibleAssignment(GridSchedError):
    def __init__(self, job_id: str, reason: str) -> None:
        super().__init__(f"job {job_id!r}: {reason}")
        self.job_id = job_id
        self.reason = reason


class InputClassViolation(GridSchedError):
    """An algorithm received an instance outside its input class."""


class NotAgreeable(InputClassViolation):
    pass


class NotLoose(InputClassViolation):
    pass


class NotUnitWidth(InputClassViolation):
    pass


class InfeasibleOutcome(GridSchedError):
    """An online run left a job unable to meet its deadline."""

    def __init__(self, job_id: str, now: int) -> None:
        super().__init__(f"job {job_id!r} can no longer finish by its deadline (t={now})")
        self.job_id = job_id
        self.now = now


class NoFeasibleSlot(GridSchedError):
    pass


class EmptyInstance(GridSchedError):
    pass


class InfeasibleInstance(GridSchedError):
    pass


class TooLarge(GridSchedError):
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"search space {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class AlgorithmStalled(GridSchedError):
    pass


class UnsatisfiableConstraint(GridSchedError):
    pass
