"""Symbolic delivery oracle.

Every multicast message ``X_sigma`` is cut into quality intervals and each
interval is placed on one sub-signal.  With members ``m_1 < m_2 < ...`` of
``sigma``, sub-signal ``m_1`` carries ``[0, Q_{m_1}]`` and sub-signal ``m_j``
carries ``(Q_{m_{j-1}}, Q_{m_j}]``: each member tops the message up to its own
quality at its own level.  Counting these intervals per sub-signal gives the
closed-form ``ell_n`` term by term: messages led by ``n`` contribute
``Q_n C(K-n, t)``, and messages whose member before ``n`` is ``p`` contribute
``(Q_n - Q_p) C(K-n+p-1, t-1)``; regrouping with the hockey-stick identity
yields the layer, prefix and catch-up parts of the closed form.

Sub-signals are 1-based sorted positions; so are the users inside ``sigma``.
"""

import csv
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import binom, render
from .errors import ScaleError
from .model import layer_sizes
from .placement import format_subset, multicast_messages

__all__ = [
    "MESSAGE_LIMIT",
    "Interval",
    "LayerAssignment",
    "DecodingReport",
    "assign_intervals",
    "measured_loads",
    "verify_decoding",
    "write_trace",
    "drop_interval",
]

MESSAGE_LIMIT = 10**6


@dataclass(frozen=True, order=True)
class Interval:
    """``[lo, hi]`` when ``lo == 0``, otherwise ``(lo, hi]``."""

    lo: Fraction
    hi: Fraction

    @property
    def length(self):
        return self.hi - self.lo

    def __str__(self):
        left = "[" if self.lo == 0 else "("
        return f"{left}{render(self.lo)},{render(self.hi)}]"


@dataclass
class LayerAssignment:
    """``signals[n-1]`` lists the ``(sigma, Interval)`` pairs on sub-signal ``n``."""

    K: int
    t: int
    signals: list

    def pairs(self):
        for n, items in enumerate(self.signals, 1):
            for sigma, iv in items:
                yield n, sigma, iv


def _check_scale(K, t, force):
    count = binom(K, t + 1)
    if count > MESSAGE_LIMIT and not force:
        raise ScaleError(count, MESSAGE_LIMIT)


def assign_intervals(scenario, Q, force=False):
    K, t = scenario.K, scenario.t
    _check_scale(K, t, force)
    Qf = layer_sizes(Q).q_full
    signals = [[] for _ in range(K)]
    for sigma in multicast_messages(K, t):
        lo = Fraction(0)
        for m in sigma.subset:
            hi = Qf[m - 1]
            if hi > lo:
                signals[m - 1].append((sigma, Interval(lo, hi)))
            lo = max(lo, hi)
    return LayerAssignment(K, t, signals)


def measured_loads(assignment):
    return tuple(
        sum((iv.length for _, iv in items), Fraction(0)) for items in assignment.signals
    )


@dataclass
class DecodingReport:
    """Per-user verdicts.

    ``failures[k]`` holds human-readable counterexamples for user ``k``
    (1-based sorted index); it is empty when the user decodes everything.
    """

    passed: dict
    failures: dict
    loads: tuple
    coverage: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self):
        return all(self.passed.values())

    def first_failure(self):
        for k in sorted(self.failures):
            if self.failures[k]:
                return k, self.failures[k][0]
        return None


def _coverage_gap(intervals, top):
    """Describe how ``intervals`` fail to tile ``[0, top]`` exactly, else None."""
    reach = Fraction(0)
    for iv in sorted(intervals):
        if iv.lo > reach:
            return f"missing {Interval(reach, iv.lo)}"
        if iv.lo < reach:
            return f"overlap {Interval(iv.lo, min(reach, iv.hi))}"
        reach = iv.hi
    if reach < top:
        return f"missing {Interval(reach, top)}"
    if reach > top:
        return f"over-delivery {Interval(top, reach)}"
    return None


def verify_decoding(scenario, Q, assignment):
    """Check that user ``k`` recovers exactly ``[0, Q_k]`` of every subfile it
    wants using sub-signals ``1..k`` only."""
    K = scenario.K
    Qf = layer_sizes(Q).q_full
    received = {k: {} for k in range(1, K + 1)}
    for n, sigma, iv in assignment.pairs():
        for k in sigma.subset:
            if k >= n:
                received[k].setdefault(sigma.subset, []).append(iv)

    failures = {k: [] for k in range(1, K + 1)}
    coverage = {}
    for sigma in multicast_messages(K, scenario.t):
        for k in sigma.subset:
            got = received[k].get(sigma.subset, [])
            gap = _coverage_gap(got, Qf[k - 1])
            if gap is not None:
                failures[k].append(
                    f"user {k}, message {format_subset(sigma.subset)}: {gap}"
                )
            coverage[(k, sigma.subset)] = sorted(got)
    passed = {k: not errs for k, errs in failures.items()}
    return DecodingReport(passed, failures, measured_loads(assignment), coverage)


def write_trace(assignment, stream):
    """CSV rows ``sub_signal, sigma, interval_lo, interval_hi``."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["sub_signal", "sigma", "interval_lo", "interval_hi"])
    for n, sigma, iv in assignment.pairs():
        writer.writerow([n, format_subset(sigma.subset), render(iv.lo), render(iv.hi)])


def drop_interval(assignment, n, index=0):
    """Copy of ``assignment`` with one interval removed from sub-signal ``n``."""
    signals = [list(items) for items in assignment.signals]
    del signals[n - 1][index]
    return LayerAssignment(assignment.K, assignment.t, signals)

