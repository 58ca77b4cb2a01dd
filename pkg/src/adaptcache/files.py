"""Scenario files and plan output.

Both are JSON with every rational written as a ``"p/q"`` string so values
survive serialization exactly.  Per-user lists in a plan come in two orders:
``q`` and ``alpha`` follow the caller's original user order, everything
indexed by sub-signal follows sorted order, and ``permutation[j]`` is the
original index of the user at sorted position ``j + 1``.
"""

import json
from dataclasses import dataclass, field, fields
from fractions import Fraction

from . import allocation, power, timing
from .combinatorics import rational_of, render
from .errors import DomainError, RationalParseError
from .model import MAN, build_scenario

__all__ = [
    "ScenarioFile",
    "PlanOutput",
    "load_scenario",
    "parse_scenario",
    "scenario_to_dict",
    "make_plan",
    "allocation_block",
]


@dataclass
class ScenarioFile:
    users: int
    gamma: Fraction
    alpha: list
    target_time: object = MAN
    method: str = "sum_quality"
    q: list = None

    def scenario(self):
        return build_scenario(self.users, self.gamma, self.alpha, self.target_time)


def _rat(value, where):
    try:
        return rational_of(value)
    except RationalParseError as exc:
        raise DomainError(f"{where}: {exc}") from exc


def parse_scenario(data):
    """Validate a decoded scenario JSON object into a :class:`ScenarioFile`."""
    if not isinstance(data, dict):
        raise DomainError("scenario file must hold a JSON object")
    missing = [k for k in ("users", "gamma", "alpha") if k not in data]
    if missing:
        raise DomainError(f"scenario file missing field(s): {', '.join(missing)}")
    users = data["users"]
    if not isinstance(users, int) or isinstance(users, bool):
        raise DomainError(f"users must be an integer, got {users!r}")
    gamma = _rat(data["gamma"], "gamma")
    if not isinstance(data["alpha"], list):
        raise DomainError("alpha must be a list of rational strings")
    if len(data["alpha"]) != users:
        raise DomainError(f"alpha lists {len(data['alpha'])} strengths for {users} users")
    alpha = [_rat(a, f"alpha[{i}]") for i, a in enumerate(data["alpha"])]
    target = data.get("target_time", MAN)
    if target != MAN:
        target = _rat(target, "target_time")
    alloc = data.get("allocation") or {}
    method = alloc.get("method", "sum_quality")
    if method not in allocation.METHODS:
        raise DomainError(f"unknown allocation method {method!r}")
    q = alloc.get("q")
    if q is not None:
        if method != "explicit":
            raise DomainError("an explicit q list requires method 'explicit'")
        if not isinstance(q, list) or len(q) != users:
            raise DomainError(f"explicit q must list {users} qualities")
        q = [_rat(v, f"q[{i}]") for i, v in enumerate(q)]
    elif method == "explicit":
        raise DomainError("method 'explicit' requires allocation.q")
    return ScenarioFile(users, gamma, alpha, target, method, q)


def load_scenario(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path}: invalid JSON ({exc})") from exc
    return parse_scenario(data)


def scenario_to_dict(scenario, method=None, q=None):
    out = {
        "users": scenario.K,
        "gamma": render(scenario.gamma),
        "alpha": [render(a) for a in scenario.alpha_original],
        "target_time": scenario.target if scenario.target == MAN else render(scenario.target),
    }
    if method is not None:
        out["allocation"] = {"method": method}
        if q is not None:
            out["allocation"]["q"] = [render(v) for v in q]
    return out


_RATIONAL_LISTS = (
    "alpha", "q", "q_sorted", "layer_sizes", "loads_ell", "loads_L", "pi", "rates", "sub_times",
)
_RATIONALS = ("gamma", "t_man", "total_time", "beta")


@dataclass
class PlanOutput:
    users: int
    gamma: Fraction
    cache_degree: int
    target_time: Fraction
    t_man: Fraction
    method: str
    permutation: list
    alpha: list
    q: list
    q_sorted: list
    layer_sizes: list
    loads_ell: list
    loads_L: list
    bottleneck: int
    bottleneck_user: int
    argmax: list
    pi: list
    rates: list
    sub_times: list
    total_time: Fraction
    binding: list
    beta: Fraction = None
    warnings: list = field(default_factory=list)

    def to_dict(self):
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name in _RATIONAL_LISTS:
                v = [render(x) for x in v]
            elif f.name in _RATIONALS or f.name == "target_time":
                v = None if v is None else render(v)
            out[f.name] = v
        return out

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data):
        kw = {}
        for f in fields(cls):
            v = data.get(f.name)
            if f.name in _RATIONAL_LISTS:
                v = [rational_of(x) for x in v]
            elif (f.name in _RATIONALS or f.name == "target_time") and v is not None:
                v = rational_of(v)
            elif f.name == "warnings" and v is None:
                v = []
            kw[f.name] = v
        return cls(**kw)

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))

    def scenario(self):
        """Rebuild the scenario, with the concrete target time."""
        return build_scenario(self.users, self.gamma, self.alpha, self.target_time)


def make_plan(scenario, result):
    """Compose an allocation result with its loads and power plan."""
    Q = result.Q
    prof = timing.load_profile(scenario, Q)
    plan = power.power_plan(scenario, Q, prof)
    _, argmax = timing.delivery_time(scenario, Q, prof)
    return PlanOutput(
        users=scenario.K,
        gamma=scenario.gamma,
        cache_degree=scenario.t,
        target_time=scenario.target_time,
        t_man=scenario.t_man,
        method=result.method,
        permutation=list(scenario.user_ids),
        alpha=list(scenario.alpha_original),
        q=scenario.to_original(Q.q_full),
        q_sorted=list(Q.q_full),
        layer_sizes=list(Q.layers),
        loads_ell=list(prof.ell),
        loads_L=list(prof.L),
        bottleneck=plan.bottleneck,
        bottleneck_user=scenario.user_ids[plan.bottleneck - 1],
        argmax=list(argmax),
        pi=list(plan.pi),
        rates=list(plan.rates),
        sub_times=list(plan.sub_times),
        total_time=plan.total_time,
        binding=list(result.binding),
        beta=result.beta,
        warnings=list(result.warnings),
    )


def allocation_block(scenario, result):
    out = {
        "method": result.method,
        "permutation": list(scenario.user_ids),
        "q": [render(v) for v in scenario.to_original(result.q)],
        "q_sorted": [render(v) for v in result.q],
        "achieved_time": render(result.achieved_time),
        "target_time": render(result.target_time),
        "binding": list(result.binding),
        "beta": None if result.beta is None else render(result.beta),
        "warnings": list(result.warnings),
    }
    if result.method == "max_min":
        out["q_hat"] = render(allocation.max_min_level(scenario))
    return out
