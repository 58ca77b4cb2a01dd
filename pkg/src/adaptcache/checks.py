"""Property checks shared by the ``verify`` command and the test-suite.

Each check takes a scenario and returns a list of failure strings; an empty
list means the property held.  Everything is compared as exact rationals.
"""

import random
from fractions import Fraction

from . import allocation, delivery, oracle, power, timing
from .combinatorics import binom
from .errors import AdaptCacheError
from .model import build_scenario

__all__ = [
    "random_scenario",
    "random_quality",
    "check_baseline_bound",
    "check_load_identity",
    "check_oracle_equivalence",
    "check_power_plan",
    "check_allocations",
    "check_dominance",
    "check_grid",
    "CHECKS",
    "run_checks",
]

DECODE_LIMIT = 10**4


def random_scenario(rng, max_users, max_den=16, target="MAN"):
    """Random instance with ``1 <= K <= max_users`` and ``0 <= t < K``."""
    K = rng.randint(1, max_users)
    t = rng.randint(0, K - 1)
    alpha = []
    for _ in range(K):
        den = rng.randint(1, max_den)
        alpha.append(Fraction(rng.randint(1, den), den))
    return build_scenario(K, Fraction(t, K), alpha, target)


def random_quality(rng, K, max_den=32):
    """Random nondecreasing vector in ``(0, 1]^K`` with small denominators."""
    vals = []
    for _ in range(K):
        den = rng.randint(1, max_den)
        vals.append(Fraction(rng.randint(1, den), den))
    return tuple(sorted(vals))


def check_baseline_bound(scenario):
    T, _ = timing.delivery_time(scenario, scenario.alpha)
    if T > scenario.t_man:
        return [f"delivery_time(Q=alpha) = {T} > T_MAN = {scenario.t_man}"]
    return []


def check_load_identity(scenario, Q):
    """``L_k`` equals the running sum of ``ell_n``."""
    prof = timing.load_profile(scenario, Q)
    run = Fraction(0)
    for k, (ell, L) in enumerate(zip(prof.ell, prof.L), 1):
        run += ell
        if run != L:
            return [f"sum ell_1..ell_{k} = {run} != L_{k} = {L} for Q={_fmt(Q)}"]
    return []


def check_oracle_equivalence(scenario, Q):
    """Interval enumeration reproduces the closed-form sub-signal loads."""
    prof = timing.load_profile(scenario, Q)
    measured = delivery.measured_loads(delivery.assign_intervals(scenario, Q))
    for n, (a, b) in enumerate(zip(measured, prof.ell), 1):
        if a != b:
            return [f"measured ell_{n} = {a} != closed form {b} for Q={_fmt(Q)}"]
    return []


def check_power_plan(scenario, Q):
    errs = []
    try:
        plan = power.power_plan(scenario, Q)
    except AdaptCacheError as exc:
        return [f"power plan failed: {exc}"]
    T, _ = timing.delivery_time(scenario, Q)
    prev = Fraction(0)
    for n, p in enumerate(plan.pi, 1):
        if p < prev:
            errs.append(f"pi_{n} = {p} < pi_{n - 1} = {prev}")
        if p > scenario.alpha[n - 1]:
            errs.append(f"pi_{n} = {p} > alpha_{n} = {scenario.alpha[n - 1]}")
        prev = p
    for n, tn in enumerate(plan.sub_times, 1):
        if tn != T:
            errs.append(f"sub-signal {n} time {tn} != delivery time {T}")
    if plan.total_time != T:
        errs.append(f"plan total {plan.total_time} != delivery time {T}")
    return errs


def _methods(scenario):
    out = {}
    for name in ("baseline", "proportional_fairness", "max_min", "sum_quality"):
        out[name] = allocation.allocate(scenario, name)
    return out


def check_allocations(scenario, results=None, decode=True):
    """Feasibility, monotonicity, decodability and power plan of every method."""
    errs = []
    results = results or _methods(scenario)
    T = scenario.target_time
    small = binom(scenario.K, scenario.t + 1) <= DECODE_LIMIT
    for name, res in results.items():
        q = res.q
        achieved, _ = timing.delivery_time(scenario, q)
        if achieved > T and name != "baseline":
            errs.append(f"{name}: time {achieved} > target {T}")
        if any(b < a for a, b in zip(q, q[1:])) or any(not 0 < v <= 1 for v in q):
            errs.append(f"{name}: invalid quality vector {_fmt(q)}")
        errs += [f"{name}: {e}" for e in check_power_plan(scenario, q)]
        if decode and small:
            asg = delivery.assign_intervals(scenario, q)
            rep = delivery.verify_decoding(scenario, q, asg)
            if not rep.ok:
                errs.append(f"{name}: decoding failed: {rep.first_failure()[1]}")
    return errs


def check_dominance(scenario, results=None):
    results = results or _methods(scenario)
    errs = []
    qs, qm = results["sum_quality"].q, results["max_min"].q
    for k, (a, b) in enumerate(zip(qs, qm), 1):
        if a < b:
            errs.append(f"sum_quality Q_{k} = {a} < max_min Q_{k} = {b}")
    return errs


def check_grid(scenario, resolution=32, results=None):
    """Greedy and closed-form optima against exhaustive grid search."""
    results = results or _methods(scenario)
    grid = oracle.GridSpec(resolution, scenario.K)
    errs = []
    _, best_sum = oracle.grid_best_sum(scenario, grid)
    greedy = sum(results["sum_quality"].q)
    if greedy < best_sum:
        errs.append(f"sum_quality total {greedy} < grid best {best_sum}")
    if greedy > best_sum + Fraction(scenario.K, resolution):
        errs.append(f"sum_quality total {greedy} exceeds grid best {best_sum} + K/r")
    _, best_min = oracle.grid_best_min(scenario, grid)
    level = min(allocation.max_min_level(scenario), Fraction(1))
    if level < best_min:
        errs.append(f"max_min level {level} < grid best minimum {best_min}")
    if level > best_min + Fraction(1, resolution):
        errs.append(f"max_min level {level} exceeds grid best minimum {best_min} + 1/r")
    return errs


def _fmt(Q):
    return "(" + ", ".join(str(Fraction(v)) for v in Q) + ")"


CHECKS = (
    "baseline_bound",
    "load_identity",
    "oracle_equivalence",
    "allocations",
    "dominance",
    "grid",
)


def run_checks(scenario, rng=None, n_quality=3):
    """Run every applicable check; return ``{name: [failures]}``.

    Load identities are exercised on the method outputs plus ``n_quality``
    random quality vectors drawn from ``rng``.
    """
    rng = rng or random.Random(0)
    report = {}
    report["baseline_bound"] = check_baseline_bound(scenario)
    results = _methods(scenario)
    vectors = [r.q for r in results.values()]
    vectors += [random_quality(rng, scenario.K) for _ in range(n_quality)]
    report["load_identity"] = [e for Q in vectors for e in check_load_identity(scenario, Q)]
    if binom(scenario.K, scenario.t + 1) <= DECODE_LIMIT:
        report["oracle_equivalence"] = [
            e for Q in vectors for e in check_oracle_equivalence(scenario, Q)
        ]
    report["allocations"] = check_allocations(scenario, results)
    report["dominance"] = check_dominance(scenario, results)
    if scenario.K <= 3:
        report["grid"] = check_grid(scenario, results=results)
    return report
