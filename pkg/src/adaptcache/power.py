"""Superposition power plan: bottleneck, power exponents, GDoF rates and times.

Sub-signal ``n`` is decodable by users ``n..K``.  Exponents are exact; only
:func:`render_powers` evaluates at a finite power and returns floats.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binom
from .errors import DegeneratePlanError, DomainError
from .timing import load_profile

__all__ = [
    "PowerPlan",
    "SubSignalPower",
    "bottleneck",
    "power_exponents",
    "gdof_rates",
    "sub_signal_times",
    "power_plan",
    "render_powers",
]


@dataclass(frozen=True)
class PowerPlan:
    bottleneck: int
    pi: tuple
    rates: tuple
    sub_times: tuple
    total_time: Fraction
    empty: tuple  # sub-signals carrying no load

    def __len__(self):
        return len(self.pi)


def bottleneck(scenario, Q, loads=None):
    """Last index maximizing ``L_k / alpha_k``.

    Any maximizer gives the same exponents, since ``alpha_w / L_w`` is the
    same number for all of them.
    """
    if loads is None:
        loads = load_profile(scenario, Q)
    ratios = [L / a for L, a in zip(loads.L, scenario.alpha)]
    top = max(ratios)
    return max(k for k, r in enumerate(ratios, 1) if r == top)


def power_exponents(scenario, Q, loads=None, w=None):
    if loads is None:
        loads = load_profile(scenario, Q)
    if w is None:
        w = bottleneck(scenario, Q, loads)
    Lw = loads.L[w - 1]
    if Lw == 0:
        raise DegeneratePlanError("all loads are zero; nothing to transmit")
    scale = scenario.alpha[w - 1] / Lw
    return tuple(L * scale for L in loads.L)


def gdof_rates(pi):
    out, prev = [], Fraction(0)
    for p in pi:
        if p < prev:
            raise DomainError(f"power exponents must be nondecreasing: {prev} > {p}")
        out.append(p - prev)
        prev = p
    return tuple(out)


def sub_signal_times(scenario, loads, rates, T_target):
    """Per-sub-signal transmission time; empty sub-signals get ``T_target``."""
    sub = binom(scenario.K, scenario.t)
    times = []
    for ell, R in zip(loads.ell, rates):
        times.append(Fraction(ell, sub) / R if ell > 0 else Fraction(T_target))
    return tuple(times)


def power_plan(scenario, Q, loads=None):
    if loads is None:
        loads = load_profile(scenario, Q)
    w = bottleneck(scenario, Q, loads)
    pi = power_exponents(scenario, Q, loads, w)
    rates = gdof_rates(pi)
    total = loads.L[w - 1] / (scenario.alpha[w - 1] * binom(scenario.K, scenario.t))
    times = sub_signal_times(scenario, loads, rates, total)
    empty = tuple(n for n, ell in enumerate(loads.ell, 1) if ell == 0)
    return PowerPlan(w, pi, rates, times, total, empty)


@dataclass(frozen=True)
class SubSignalPower:
    """Finite-power view of one sub-signal.

    ``snr_exponent[k]`` and ``rate[k]`` are keyed by the 1-based sorted index
    of each user ``k >= n`` that decodes this sub-signal; rates are in nats
    per channel use.
    """

    index: int
    power: float
    snr_exponent: dict
    rate: dict


def render_powers(pi, P, alpha=None):
    """Evaluate the superposition at transmit power ``P``.

    Sub-signal ``n`` gets ``P^-pi_{n-1} - P^-pi_n`` of the unit power budget
    (``pi_0 = 0``).  At user ``k`` with strength ``alpha_k`` its rate is
    ``log(1 + P^a_k P_n / (1 + P^a_k P^-pi_n))``, the lower sub-signals being
    treated as noise.  When ``alpha`` is omitted each sub-signal is evaluated
    at ``alpha_k = 1``.
    """
    if P <= 1:
        raise DomainError(f"transmit power must exceed 1, got {P}")
    gdof_rates(pi)  # monotonicity check
    K = len(pi)
    if alpha is None:
        alpha = [Fraction(1)] * K
    out = []
    prev = Fraction(0)
    for n, p in enumerate(pi, 1):
        power = P ** -float(prev) - P ** -float(p)
        snr, rate = {}, {}
        for k in range(n, K + 1):
            a = float(alpha[k - 1])
            signal = P**a * power
            noise = 1.0 + P**a * P ** -float(p)
            snr[k] = Fraction(alpha[k - 1]) - prev
            rate[k] = math.log1p(signal / noise)
        out.append(SubSignalPower(n, power, snr, rate))
        prev = p
    return out
