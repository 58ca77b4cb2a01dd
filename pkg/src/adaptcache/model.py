"""Problem instances, baseline delivery time and quality-layer decomposition."""

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import as_rational
from .errors import DomainError, MemorySharingUnsupported

__all__ = ["MAN", "Scenario", "QualityVector", "build_scenario", "t_man", "layer_sizes"]

MAN = "MAN"


def t_man(K, t):
    """Delivery time of the undegraded coded-caching broadcast, ``(K - t)/(1 + t)``."""
    if not 0 <= t <= K:
        raise DomainError(f"cache degree t={t} outside [0, {K}]")
    return Fraction(K - t, 1 + t)


@dataclass(frozen=True)
class Scenario:
    """A validated instance with channel strengths sorted ascending.

    ``user_ids[j]`` is the original (1-based) index of the user at sorted
    position ``j``.  ``target`` is either :data:`MAN` or a positive Fraction.
    """

    K: int
    gamma: Fraction
    t: int
    alpha: tuple
    target: object = MAN
    user_ids: tuple = ()
    warnings: tuple = field(default=(), compare=False)

    @property
    def t_man(self):
        return t_man(self.K, self.t)

    @property
    def target_time(self):
        return self.t_man if self.target == MAN else self.target

    def to_original(self, values):
        """Reorder a sorted-position sequence into original user order."""
        out = [None] * self.K
        for pos, uid in enumerate(self.user_ids):
            out[uid - 1] = values[pos]
        return out

    def to_sorted(self, values):
        """Reorder an original-order sequence into sorted positions."""
        return [values[uid - 1] for uid in self.user_ids]

    @property
    def alpha_original(self):
        return self.to_original(self.alpha)


def build_scenario(K, gamma, alpha_raw, target=MAN):
    if not isinstance(K, int) or isinstance(K, bool) or K < 1:
        raise DomainError(f"user count must be a positive integer, got {K!r}")
    gamma = as_rational(gamma)
    if not 0 <= gamma <= 1:
        raise DomainError(f"cache fraction {gamma} outside [0, 1]")
    kg = K * gamma
    if kg.denominator != 1:
        raise MemorySharingUnsupported(
            f"memory-sharing unsupported: K*gamma = {kg} is not an integer"
        )
    alpha_raw = [as_rational(a) for a in alpha_raw]
    if len(alpha_raw) != K:
        raise DomainError(f"expected {K} channel strengths, got {len(alpha_raw)}")
    for i, a in enumerate(alpha_raw, 1):
        if not 0 < a <= 1:
            raise DomainError(f"channel strength of user {i} is {a}, outside (0, 1]")

    warnings = []
    if target != MAN:
        target = as_rational(target)
        if target <= 0:
            raise DomainError(f"target time must be positive, got {target}")
        if target < t_man(K, int(kg)):
            warnings.append(
                f"target time {target} is below T_MAN = {t_man(K, int(kg))}; "
                "qualities are scaled below the channel strengths"
            )

    # sorted() is stable, so equal strengths keep their original order
    order = sorted(range(K), key=lambda i: alpha_raw[i])
    return Scenario(
        K=K,
        gamma=gamma,
        t=int(kg),
        alpha=tuple(alpha_raw[i] for i in order),
        target=target,
        user_ids=tuple(i + 1 for i in order),
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class QualityVector:
    """Cumulative qualities ``q_full`` and their layer increments ``layers``."""

    q_full: tuple
    layers: tuple

    def __len__(self):
        return len(self.q_full)

    def __getitem__(self, k):
        return self.q_full[k]

    def __iter__(self):
        return iter(self.q_full)


def layer_sizes(Q):
    """Split a nondecreasing quality vector into its layer increments.

    >>> layer_sizes([Fraction(5, 6), 1]).layers
    (Fraction(5, 6), Fraction(1, 6))
    """
    if isinstance(Q, QualityVector):
        return Q
    Q = tuple(as_rational(x) for x in Q)
    prev = Fraction(0)
    layers = []
    for k, qk in enumerate(Q, 1):
        if not 0 < qk <= 1:
            raise DomainError(f"quality Q_{k} = {qk} outside (0, 1]")
        if qk < prev:
            raise DomainError(f"quality decreases at index {k}: {prev} > {qk}")
        layers.append(qk - prev)
        prev = qk
    return QualityVector(Q, tuple(layers))
