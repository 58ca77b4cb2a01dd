"""Brute-force grid references for the allocation optimizers.

Qualities are restricted to multiples of ``1/r`` in ``(0, 1]`` and only
nondecreasing vectors are visited.  The search is a depth-first walk over
coordinates with exact integer constraint checks; a prefix that already
breaks a delivery constraint is cut, since later coordinates never enter
earlier constraints.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .combinatorics import binom
from .errors import DomainError, InfeasibleTargetError, ScaleError

__all__ = ["GridSpec", "GRID_BUDGET", "grid_size", "grid_best_sum", "grid_best_min"]

GRID_BUDGET = 10**7


@dataclass(frozen=True)
class GridSpec:
    resolution: int
    K: int

    def __post_init__(self):
        if self.resolution < 2:
            raise DomainError(f"grid resolution must be >= 2, got {self.resolution}")


def grid_size(grid):
    """Enumeration count charged against the budget: ``C(r + K, K)``."""
    return binom(grid.resolution + grid.K, grid.K)


def _caps(scenario, r):
    """Integer weights and right-hand sides of the prefix constraints on the
    scaled grid: ``sum_i g_i * W[k][i] <= caps[k]``."""
    K, t = scenario.K, scenario.t
    sub = binom(K, t)
    T = scenario.target_time
    W = [[binom(K - k + i - 1, t) for i in range(1, k + 1)] for k in range(1, K + 1)]
    caps = [floor(Fraction(r) * a * T * sub) for a in scenario.alpha]
    return W, caps


def _prefix_ok(W, caps, g):
    k = len(g) - 1
    return sum(x * w for x, w in zip(g, W[k])) <= caps[k]


def _check(scenario, grid, budget):
    if grid.K != scenario.K:
        raise DomainError(f"grid dimension {grid.K} != user count {scenario.K}")
    if budget is not None:
        count = grid_size(grid)
        if count > budget:
            raise ScaleError(count, budget, what="grid points")


def grid_best_sum(scenario, grid, budget=GRID_BUDGET):
    """Feasible grid vector with the largest sum, and that sum.

    Ties resolve to the lexicographically largest vector.
    """
    _check(scenario, grid, budget)
    r, K = grid.resolution, scenario.K
    W, caps = _caps(scenario, r)
    best = [None, -1]
    g = []

    def walk(lo, partial):
        depth = len(g)
        if depth == K:
            if partial > best[1]:
                best[0], best[1] = list(g), partial
            return
        if partial + (K - depth) * r <= best[1]:
            return
        for v in range(r, lo - 1, -1):
            if partial + v + (K - depth - 1) * r <= best[1]:
                break
            g.append(v)
            if _prefix_ok(W, caps, g):
                walk(v, partial + v)
            g.pop()

    walk(1, 0)
    if best[0] is None:
        raise InfeasibleTargetError(f"no feasible vector on the 1/{r} grid")
    Q = tuple(Fraction(v, r) for v in best[0])
    return Q, Fraction(best[1], r)


def grid_best_min(scenario, grid, budget=GRID_BUDGET):
    """Feasible grid vector maximizing ``min_k Q_k``, and that minimum.

    The first coordinate is scanned downward; for each value the completion
    search goes upward from it and stops at the first feasible vector.
    """
    _check(scenario, grid, budget)
    r, K = grid.resolution, scenario.K
    W, caps = _caps(scenario, r)
    g = []

    def complete(lo):
        if len(g) == K:
            return True
        for v in range(lo, r + 1):
            g.append(v)
            if not _prefix_ok(W, caps, g):
                g.pop()
                return False  # larger values only add load
            if complete(v):
                return True
            g.pop()
        return False

    for first in range(r, 0, -1):
        g[:] = [first]
        if _prefix_ok(W, caps, g) and complete(first):
            Q = tuple(Fraction(v, r) for v in g)
            return Q, min(Q)
    raise InfeasibleTargetError(f"no feasible vector on the 1/{r} grid")
