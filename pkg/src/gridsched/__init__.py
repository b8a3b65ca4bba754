"""Non-preemptive scheduling of rigid power jobs to minimise the sum of load**alpha."""

from .core import (
    Instance, Job, Schedule, avg_profile, cost, load_profile, schedule_cost, validate_schedule,
)
from .errors import GridSchedError

__version__ = "0.1.0"

__all__ = [
    "GridSchedError", "Instance", "Job", "Schedule", "avg_profile", "cost", "load_profile",
    "schedule_cost", "validate_schedule",
]
