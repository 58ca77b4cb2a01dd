"""Symbolic centralized placement and multicast messages.

Users are 1-based.  A subfile is identified by the file it belongs to and the
``t``-subset of users caching it; a multicast message by its ``(t+1)``-subset.
Nothing here touches payload bits: decodability is a set-membership fact.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError

__all__ = [
    "SubfileLabel",
    "MessageLabel",
    "subpacketize",
    "cache_contents",
    "multicast_messages",
    "message_components",
    "format_subset",
]


@dataclass(frozen=True, order=True)
class SubfileLabel:
    file_index: int
    subset: tuple

    def __str__(self):
        return f"W^{self.file_index}_{format_subset(self.subset)}"


@dataclass(frozen=True, order=True)
class MessageLabel:
    subset: tuple

    def __str__(self):
        return f"X_{format_subset(self.subset)}"

    def __iter__(self):
        return iter(self.subset)

    def __contains__(self, k):
        return k in self.subset


def format_subset(subset):
    return "{" + ",".join(str(i) for i in subset) + "}"


def subpacketize(K, t):
    """All ``t``-subsets of ``1..K`` in lexicographic order."""
    if not 0 <= t <= K:
        raise DomainError(f"cache degree t={t} outside [0, {K}]")
    return list(combinations(range(1, K + 1), t))


def cache_contents(K, t, k, files=None):
    """Subfile labels stored by user ``k``.

    With ``files=None`` the result is the list of cached subsets, identical
    for every file; otherwise one :class:`SubfileLabel` per (file, subset).
    """
    if not 1 <= k <= K:
        raise DomainError(f"user {k} outside 1..{K}")
    subsets = [tau for tau in subpacketize(K, t) if k in tau]
    if files is None:
        return subsets
    return [SubfileLabel(n, tau) for n in files for tau in subsets]


def multicast_messages(K, t):
    if not 0 <= t < K:
        raise DomainError(f"multicast messages need t+1 <= K, got t={t}, K={K}")
    return [MessageLabel(s) for s in combinations(range(1, K + 1), t + 1)]


def message_components(sigma, demands=None):
    """The XOR terms of ``X_sigma``: user ``k`` wants ``W^{d_k}`` on ``sigma - {k}``.

    ``demands`` maps user index (1-based position) to requested file; the
    default is the worst case, user ``k`` requesting file ``k``.
    """
    subset = tuple(sigma.subset if isinstance(sigma, MessageLabel) else sigma)
    out = []
    for k in subset:
        d = k if demands is None else demands[k - 1]
        rest = tuple(i for i in subset if i != k)
        out.append((k, SubfileLabel(d, rest)))
    return out
