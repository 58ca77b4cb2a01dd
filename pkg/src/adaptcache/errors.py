"""Exception hierarchy shared by every module of the package."""


class AdaptCacheError(Exception):
    """Base class for all errors raised by :mod:`adaptcache`."""


class RationalParseError(AdaptCacheError, ValueError):
    """Text could not be read as an exact rational."""

    def __init__(self, token, reason="malformed rational"):
        self.token = token
        super().__init__(f"{reason}: {token!r}")


class DomainError(AdaptCacheError, ValueError):
    """An input lies outside the domain of the model."""


class MemorySharingUnsupported(DomainError):
    """``K * gamma`` is not an integer."""


class InfeasibleTargetError(AdaptCacheError):
    """No positive quality vector meets the requested delivery time."""


class DegeneratePlanError(AdaptCacheError):
    """Every load is zero, so power exponents are undefined."""


class ScaleError(AdaptCacheError):
    """An enumeration would exceed its size budget."""

    def __init__(self, count, limit, what="multicast messages"):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} {what} exceeds the limit of {limit}")


class ConsistencyError(AdaptCacheError, AssertionError):
    """An internal invariant failed; indicates a bug or an unhandled case."""
