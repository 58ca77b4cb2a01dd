"""Exact integers, rationals and the zero-extended binomial coefficient.

Every scalar in the package is a :class:`fractions.Fraction`; Python ints are
already arbitrary precision, so no wrapper types are needed.
"""

import math
import re
from fractions import Fraction

from .errors import RationalParseError

__all__ = ["Rational", "binom", "rational_of", "render", "as_rational"]

Rational = Fraction

_RATIONAL_RE = re.compile(
    r"""
    \A\s*
    (?P<sign>[-+]?)
    (?:
        (?P<num>\d+)\s*/\s*(?P<den>\d+)     # p/q
      | (?P<int>\d+)(?:\.(?P<frac>\d*))?    # p or p.ddd
      | \.(?P<frac_only>\d+)                # .ddd
    )
    \s*\Z
    """,
    re.VERBOSE,
)


def binom(n, k):
    """Binomial coefficient, zero whenever ``n < k`` or ``k < 0``.

    >>> binom(6, 2), binom(4, 7)
    (15, 0)
    """
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def rational_of(text):
    """Parse ``"p"``, ``"p/q"`` or a terminating decimal into an exact Fraction.

    Decimals are read digit by digit, so ``"0.8"`` is exactly ``4/5``.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalParseError(text, "expected a string")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalParseError(text)
    sign = -1 if m["sign"] == "-" else 1
    if m["num"] is not None:
        den = int(m["den"])
        if den == 0:
            raise RationalParseError(text, "zero denominator")
        return sign * Fraction(int(m["num"]), den)
    if m["frac_only"] is not None:
        whole, digits = "0", m["frac_only"]
    else:
        whole, digits = m["int"], m["frac"] or ""
    return sign * Fraction(int(whole + digits), 10 ** len(digits))


def as_rational(value):
    """Coerce ints, Fractions and rational strings; floats are rejected."""
    if isinstance(value, float):
        raise RationalParseError(value, "floats are not exact; pass a string")
    return rational_of(value)


def render(value):
    """Canonical text form: ``"p/q"`` in lowest terms, ``"p"`` for integers."""
    return str(Fraction(value))
