"""Quality allocation: baseline, proportional fairness, max-min and max-sum.

Each method returns qualities in sorted user order such that every prefix
constraint ``L_k(Q) <= alpha_k * T_tar * C(K, t)`` holds exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import as_rational, binom
from .errors import ConsistencyError, DomainError, InfeasibleTargetError
from .model import layer_sizes
from .timing import delivery_time, prefix_load

__all__ = [
    "METHODS",
    "AllocationResult",
    "allocate",
    "baseline",
    "proportional_fairness",
    "max_min",
    "max_min_level",
    "sum_quality",
    "explicit",
    "binding_set",
]

METHODS = ("baseline", "proportional_fairness", "max_min", "sum_quality", "explicit")

ONE = Fraction(1)


@dataclass(frozen=True)
class AllocationResult:
    Q: object  # QualityVector, sorted order
    method: str
    achieved_time: Fraction
    target_time: Fraction
    binding: tuple
    beta: Fraction = None
    warnings: tuple = field(default=(), compare=False)

    @property
    def q(self):
        return self.Q.q_full


def _coef(scenario, k, i):
    """Weight of ``Q_i`` in ``L_k``."""
    return binom(scenario.K - k + i - 1, scenario.t)


def _budgets(scenario, T):
    sub = binom(scenario.K, scenario.t)
    return [a * T * sub for a in scenario.alpha]


def binding_set(scenario, Q, T=None):
    """Indices ``k`` (1-based) whose prefix constraint holds with equality."""
    T = scenario.target_time if T is None else T
    budgets = _budgets(scenario, T)
    return tuple(
        k
        for k in range(1, scenario.K + 1)
        if prefix_load(scenario, Q, k) == budgets[k - 1]
    )


def _finish(scenario, Q, method, beta=None, extra_warnings=()):
    qv = layer_sizes(Q)
    T = scenario.target_time
    achieved, _ = delivery_time(scenario, qv)
    if achieved > T:
        raise ConsistencyError(f"{method}: achieved time {achieved} exceeds target {T}")
    return AllocationResult(
        Q=qv,
        method=method,
        achieved_time=achieved,
        target_time=T,
        binding=binding_set(scenario, qv, T),
        beta=beta,
        warnings=tuple(scenario.warnings) + tuple(extra_warnings),
    )


def _check_positive(q, method):
    for k, v in enumerate(q, 1):
        if v <= 0:
            raise InfeasibleTargetError(
                f"{method}: target time forces Q_{k} = {v} <= 0"
            )


def baseline(scenario):
    """``Q = alpha``; never slower than ``T_MAN``."""
    Q = tuple(scenario.alpha)
    qv = layer_sizes(Q)
    achieved, _ = delivery_time(scenario, qv)
    T = scenario.target_time
    warnings = list(scenario.warnings)
    if achieved > T:
        # Only possible below T_MAN; the baseline is not rescaled.
        warnings.append(f"baseline time {achieved} exceeds target {T}")
    return AllocationResult(
        Q=qv,
        method="baseline",
        achieved_time=achieved,
        target_time=T,
        binding=binding_set(scenario, qv, T),
        warnings=tuple(warnings),
    )


def _solve_beta(scenario, clamped, budgets):
    """Largest beta meeting every prefix constraint with ``clamped`` users at 1
    and the rest at ``beta * alpha_k``.  ``None`` if beta is unbounded."""
    K = scenario.K
    best = None
    for k in range(1, K + 1):
        fixed = Fraction(0)
        slope = Fraction(0)
        for i in range(1, k + 1):
            c = _coef(scenario, k, i)
            if i in clamped:
                fixed += c
            else:
                slope += scenario.alpha[i - 1] * c
        room = budgets[k - 1] - fixed
        if slope == 0:
            if room < 0:
                raise InfeasibleTargetError(
                    f"proportional_fairness: users 1..{k} at full quality already "
                    "exceed the target"
                )
            continue
        bound = room / slope
        if best is None or bound < best:
            best = bound
    return best


def proportional_fairness(scenario, reiterate=True):
    """``Q_k = min(beta * alpha_k, 1)`` with the largest feasible ``beta``.

    Users whose scaled quality reaches 1 are pinned at 1 and ``beta`` is
    solved again, until the pinned set stops growing.  With
    ``reiterate=False`` a single solve is made, pinning only the users that
    are certain to saturate (``alpha_k = 1`` when ``beta >= 1`` is assured).
    """
    K = scenario.K
    T = scenario.target_time
    budgets = _budgets(scenario, T)
    if T >= scenario.t_man:
        clamped = {k for k in range(1, K + 1) if scenario.alpha[k - 1] == 1}
    else:
        clamped = set()

    for _ in range(K + 1):
        beta = _solve_beta(scenario, clamped, budgets)
        if beta is None:
            # nothing constrains beta: smallest value saturating everyone
            beta = max(ONE / a for a in scenario.alpha)
        if beta <= 0:
            raise InfeasibleTargetError(
                f"proportional_fairness: target {T} forces beta = {beta} <= 0"
            )
        new = {k for k in range(1, K + 1) if beta * scenario.alpha[k - 1] >= 1}
        if not reiterate or new <= clamped:
            break
        clamped |= new
    else:
        raise ConsistencyError("proportional_fairness: pinned set did not stabilise")

    Q = [min(beta * a, ONE) for a in scenario.alpha]
    _check_positive(Q, "proportional_fairness")
    return _finish(scenario, Q, "proportional_fairness", beta=beta)


def max_min_level(scenario, T=None):
    """Largest common quality ``Q_hat`` meeting every prefix constraint.

    Not clamped at 1.  Prefixes with no load impose nothing; if none carry
    load the level is 1.
    """
    K, t = scenario.K, scenario.t
    T = scenario.target_time if T is None else T
    full = binom(K, t + 1)
    sub = binom(K, t)
    best = None
    for w in range(1, K + 1):
        served = full - binom(K - w, t + 1)
        if served == 0:
            continue
        v = scenario.alpha[w - 1] * T * sub / served
        if best is None or v < best:
            best = v
    return ONE if best is None else best


def _feasible(scenario, Q, budgets):
    return all(
        prefix_load(scenario, Q, k) <= budgets[k - 1] for k in range(1, scenario.K + 1)
    )


def max_min(scenario):
    """Common floor ``Q_hat`` for everyone, lifted to ``alpha_k`` where higher.

    At or above ``T_MAN`` the full lift is always feasible.  Below it, users
    are lifted in order while the result stays feasible, and the remaining
    users share the last lifted level.
    """
    q_hat = max_min_level(scenario)
    if q_hat <= 0:
        raise InfeasibleTargetError(f"max_min: Q_hat = {q_hat} <= 0")
    floor = min(q_hat, ONE)
    lifted = [min(max(a, floor), ONE) for a in scenario.alpha]
    budgets = _budgets(scenario, scenario.target_time)

    warnings = []
    Q = lifted
    if not _feasible(scenario, lifted, budgets):
        K = scenario.K
        # feasibility is monotone in m; m = 0 (flat floor) is always feasible
        m = 0
        for cand in range(1, K + 1):
            trial = lifted[:cand] + [lifted[cand - 1]] * (K - cand)
            if not _feasible(scenario, trial, budgets):
                break
            m = cand
        Q = lifted[:m] + [lifted[m - 1] if m else floor] * (K - m)
        warnings.append(f"max_min: lift to alpha stopped after user {m}")
    result = _finish(scenario, Q, "max_min", extra_warnings=warnings)
    return result


def sum_quality(scenario):
    """Greedy max-sum allocation: maximize ``Q_1``, then ``Q_2`` given ``Q_1``, ...

    ``Q_n`` is the tightest of the constraints ``w >= n`` with users
    ``n..w`` at a common level, clamped at 1.
    """
    K, t = scenario.K, scenario.t
    budgets = _budgets(scenario, scenario.target_time)
    Q = []
    for n in range(1, K + 1):
        best = None
        for w in range(n, K + 1):
            spent = sum(
                (Q[i - 1] * binom(K + i - w - 1, t) for i in range(1, n)), Fraction(0)
            )
            weight = sum(binom(K + i - w - 1, t) for i in range(n, w + 1))
            if weight == 0:
                continue
            v = (budgets[w - 1] - spent) / weight
            if best is None or v < best:
                best = v
        qn = ONE if best is None else min(best, ONE)
        if qn <= 0:
            raise InfeasibleTargetError(f"sum_quality: target forces Q_{n} = {qn} <= 0")
        if Q and qn < Q[-1]:
            raise ConsistencyError(
                f"sum_quality: Q_{n} = {qn} below Q_{n - 1} = {Q[-1]}"
            )
        Q.append(qn)
    return _finish(scenario, Q, "sum_quality")


def explicit(scenario, q, order="original"):
    """Wrap a caller-chosen quality vector; ``order`` is ``"original"`` or ``"sorted"``."""
    q = [as_rational(v) for v in q]
    if len(q) != scenario.K:
        raise DomainError(f"explicit quality needs {scenario.K} entries, got {len(q)}")
    if order == "original":
        q = scenario.to_sorted(q)
    elif order != "sorted":
        raise DomainError(f"unknown order {order!r}")
    qv = layer_sizes(q)
    achieved, _ = delivery_time(scenario, qv)
    T = scenario.target_time
    if achieved > T:
        raise InfeasibleTargetError(
            f"explicit: quality vector needs time {achieved} > target {T}"
        )
    return _finish(scenario, qv, "explicit")


def allocate(scenario, method, q=None):
    if method == "baseline":
        return baseline(scenario)
    if method == "proportional_fairness":
        return proportional_fairness(scenario)
    if method == "max_min":
        return max_min(scenario)
    if method == "sum_quality":
        return sum_quality(scenario)
    if method == "explicit":
        if q is None:
            raise DomainError("method 'explicit' requires a quality vector")
        return explicit(scenario, q)
    raise DomainError(f"unknown allocation method {method!r}; choose from {METHODS}")
