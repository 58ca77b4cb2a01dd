"""Closed-form loads and delivery times.

Loads are measured in subfiles; delivery times in the normalized time slots
of the high-SNR regime.  Indices ``n`` and ``k`` are 1-based sorted positions.
All functions are exact.
"""

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import as_rational, binom
from .model import layer_sizes, t_man

__all__ = [
    "LoadProfile",
    "sub_signal_load",
    "prefix_load",
    "load_profile",
    "two_type_load",
    "delivery_time",
    "two_type_time",
    "two_type_max_quality",
]


@dataclass(frozen=True)
class LoadProfile:
    ell: tuple
    L: tuple
    total_messages: int


def _q(Q):
    return layer_sizes(Q)


def sub_signal_load(scenario, Q, n):
    """Subfiles carried by sub-signal ``n`` (1-based).

    Layer ``n`` for every message containing user ``n``, the full prefix
    ``Q_{n-1}`` for messages whose smallest member is ``n``, and the catch-up
    ``Q_{n-1} - Q_{i-1}`` for messages already partly sent at level ``i-1``.
    """
    K, t = scenario.K, scenario.t
    qv = _q(Q)
    Qf = (Fraction(0),) + qv.q_full  # Qf[j] == Q_j, Q_0 = 0
    total = qv.layers[n - 1] * binom(K - 1, t) + Qf[n - 1] * binom(K - n, t)
    for i in range(2, n):
        total += (Qf[n - 1] - Qf[i - 1]) * binom(K - n + i - 2, t - 1)
    return total


def prefix_load(scenario, Q, k):
    """Subfiles needed by users ``1..k``: ``sum_i Q_i * C(K-k+i-1, t)``."""
    K, t = scenario.K, scenario.t
    Qf = _q(Q).q_full
    return sum(
        (Qf[i - 1] * binom(K - k + i - 1, t) for i in range(1, k + 1)), Fraction(0)
    )


def load_profile(scenario, Q):
    K = scenario.K
    ell = tuple(sub_signal_load(scenario, Q, n) for n in range(1, K + 1))
    L = tuple(prefix_load(scenario, Q, k) for k in range(1, K + 1))
    return LoadProfile(ell, L, binom(K, scenario.t + 1))


def two_type_load(K, t, w, Q):
    return as_rational(Q) * (binom(K, t + 1) - binom(K - w, t + 1))


def delivery_time(scenario, Q, loads=None):
    """Return ``(T, argmax)`` where ``T = max_w L_w / (alpha_w C(K,t))``.

    ``argmax`` is the sorted tuple of every maximizing 1-based index.
    """
    if loads is None:
        L = [prefix_load(scenario, Q, k) for k in range(1, scenario.K + 1)]
    else:
        L = loads.L
    sub = binom(scenario.K, scenario.t)
    ratios = [L[k] / (scenario.alpha[k] * sub) for k in range(scenario.K)]
    T = max(ratios)
    return T, tuple(k + 1 for k, r in enumerate(ratios) if r == T)


def two_type_time(K, t, alpha, w, Q):
    """Delivery time with ``w`` users at strength ``alpha`` and quality ``Q``,
    everyone else at full strength and quality."""
    alpha, Q = as_rational(alpha), as_rational(Q)
    degraded = Q / alpha * Fraction(two_type_load(K, t, w, 1), binom(K, t))
    return max(degraded, t_man(K, t))


def two_type_max_quality(K, t, alpha, w):
    """Largest common quality for the ``w`` degraded users that keeps the
    delivery time at ``T_MAN``."""
    alpha = as_rational(alpha)
    full = binom(K, t + 1)
    served = full - binom(K - w, t + 1)
    if served == 0:
        return Fraction(1)
    return min(alpha * Fraction(full, served), Fraction(1))
