"""Exact planner and verifier for quality-adaptive coded caching over
degraded broadcast channels."""

from .allocation import (
    AllocationResult,
    allocate,
    baseline,
    max_min,
    proportional_fairness,
    sum_quality,
)
from .combinatorics import binom, rational_of, render
from .delivery import assign_intervals, measured_loads, verify_decoding
from .errors import (
    AdaptCacheError,
    DomainError,
    InfeasibleTargetError,
    MemorySharingUnsupported,
    ScaleError,
)
from .model import MAN, Scenario, build_scenario, layer_sizes, t_man
from .power import power_plan
from .timing import (
    delivery_time,
    load_profile,
    two_type_max_quality,
    two_type_time,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationResult",
    "allocate",
    "baseline",
    "max_min",
    "proportional_fairness",
    "sum_quality",
    "binom",
    "rational_of",
    "render",
    "assign_intervals",
    "measured_loads",
    "verify_decoding",
    "AdaptCacheError",
    "DomainError",
    "InfeasibleTargetError",
    "MemorySharingUnsupported",
    "ScaleError",
    "MAN",
    "Scenario",
    "build_scenario",
    "layer_sizes",
    "t_man",
    "power_plan",
    "delivery_time",
    "load_profile",
    "two_type_max_quality",
    "two_type_time",
]
