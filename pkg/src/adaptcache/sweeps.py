"""Figure data: two-type quality curves, boost over baseline, method comparison.

Each sweep returns ``(header, rows)``; rationals stay exact and every exact
column ``x`` is followed by ``x_decimal`` for plotting.
"""

import csv
from fractions import Fraction

from . import allocation
from .combinatorics import render
from .errors import DomainError
from .model import build_scenario
from .timing import two_type_max_quality

__all__ = [
    "KINDS",
    "ramp_alpha",
    "two_type_quality",
    "boost_vs_w",
    "compare_methods",
    "write_csv",
    "fig_scenario",
    "run_sweep",
]

KINDS = ("two_type_quality", "boost_vs_w", "compare_methods")

COMPARED = ("baseline", "proportional_fairness", "max_min", "sum_quality")


def _dec(x):
    return f"{float(x):.15g}"


def _exact(*values):
    out = []
    for v in values:
        out += [render(v), _dec(v)]
    return out


def ramp_alpha(K, lo=Fraction(4, 5)):
    """Strengths rising linearly from ``lo`` (first user) to 1 (last user)."""
    if K == 1:
        return [Fraction(1)]
    return [lo + (1 - lo) * Fraction(k, K - 1) for k in range(K)]


def two_type_quality(K=100, t=10, w=10, steps=100):
    """Highest degraded-user quality at ``T_MAN`` for ``alpha = i/steps``."""
    header = ["alpha", "alpha_decimal", "q_star", "q_star_decimal", "baseline", "baseline_decimal"]
    rows = []
    for i in range(1, steps + 1):
        a = Fraction(i, steps)
        q = two_type_max_quality(K, t, a, w)
        rows.append(_exact(a, q, a))
    return header, rows


def boost_vs_w(K=100, alpha=Fraction(3, 5), cache_degrees=(1, 5, 10, 20), ws=None):
    """Quality boost ``Q_star / alpha`` against the number of degraded users."""
    header = [
        "t", "gamma", "gamma_decimal", "w", "q_star", "q_star_decimal", "boost", "boost_decimal",
    ]
    ws = range(1, K + 1) if ws is None else ws
    rows = []
    for t in cache_degrees:
        for w in ws:
            q = two_type_max_quality(K, t, alpha, w)
            rows.append([t] + _exact(Fraction(t, K)) + [w] + _exact(q, q / alpha))
    return header, rows


def compare_methods(scenario):
    """Per-user quality of each method, one row per (method, sorted user)."""
    header = [
        "method", "position", "user", "alpha", "alpha_decimal", "q", "q_decimal", "ratio", "ratio_decimal",
    ]
    rows = []
    for method in COMPARED:
        res = allocation.allocate(scenario, method)
        for pos, (a, q) in enumerate(zip(scenario.alpha, res.q), 1):
            rows.append(
                [method, pos, scenario.user_ids[pos - 1]] + _exact(a, q, q / a)
            )
    return header, rows


def fig_scenario(K=20, t=3, lo=Fraction(4, 5), target="MAN"):
    return build_scenario(K, Fraction(t, K), ramp_alpha(K, lo), target)


def write_csv(header, rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def run_sweep(kind, **params):
    if kind == "two_type_quality":
        return two_type_quality(**params)
    if kind == "boost_vs_w":
        return boost_vs_w(**params)
    if kind == "compare_methods":
        return compare_methods(params["scenario"])
    raise DomainError(f"unknown sweep kind {kind!r}; choose from {KINDS}")

