"""Exact rational helpers and the float/exact mode discipline.

Exact values are :class:`fractions.Fraction` (always reduced, positive
denominator).  Float values are built-in ``float``.  A value's mode is read
off its type; the recurrence code refuses to mix the two, because Python
would otherwise silently coerce ``Fraction + float`` to ``float``.
"""
import enum
import math
import os
import re
from fractions import Fraction
from numbers import Rational

from .errors import ExactBlowup, MalformedNumber, ModeMismatch, ZeroDenominator

__all__ = [
    "Mode", "mode_of", "common_mode", "to_mode", "rat_from_string", "render",
    "rising_factorial", "int_pow", "bit_limit", "check_size",
    "is_finite", "DEFAULT_BIT_LIMIT",
]

DEFAULT_BIT_LIMIT = 1_000_000

_INTEGER = re.compile(r"-?[0-9]+")
_FRACTION = re.compile(r"(-?[0-9]+)/([0-9]+)")
_DECIMAL = re.compile(r"(-?)([0-9]+)\.([0-9]+)")


class Mode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def mode_of(x):
    if isinstance(x, float):
        return Mode.FLOAT
    if isinstance(x, Rational):
        return Mode.EXACT
    raise TypeError(f"not a scalar: {x!r}")


def common_mode(*xs):
    """Mode shared by all of ``xs``; raises ModeMismatch otherwise."""
    modes = {mode_of(x) for x in xs}
    if len(modes) != 1:
        raise ModeMismatch(f"cannot mix exact and float values: {xs!r}")
    return modes.pop()


def to_mode(x, mode):
    """Convert a scalar to ``mode``.  Exact -> float rounds to nearest."""
    return float(x) if mode is Mode.FLOAT else Fraction(x)


def rat_from_string(s):
    """Parse ``"3"``, ``"21/20"`` or ``"-0.4"`` into an exact Fraction.

    >>> rat_from_string("1.05")
    Fraction(21, 20)
    """
    if not isinstance(s, str):
        raise MalformedNumber(f"expected a string, got {type(s).__name__}")
    s = s.strip()
    if _INTEGER.fullmatch(s):
        return Fraction(int(s))
    m = _FRACTION.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {s!r}")
        return Fraction(int(m.group(1)), den)
    m = _DECIMAL.fullmatch(s)
    if m:
        sign, whole, frac = m.groups()
        value = Fraction(int(whole + frac), 10 ** len(frac))
        return -value if sign else value
    raise MalformedNumber(f"not an integer, fraction or finite decimal: {s!r}")


def render(x):
    """Serialise a scalar: exact as ``p/q`` (q > 0, reduced), float via repr."""
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rising_factorial(z, k):
    """z (z+1) ... (z+k-1); equals Gamma(z+k)/Gamma(z) away from poles."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Fraction(1) if mode_of(z) is Mode.EXACT else 1.0
    for i in range(k):
        out *= z + i
    return out


def int_pow(x, p):
    """x**p by repeated squaring.

    Float overflow saturates to +-inf instead of raising, unlike ``float.__pow__``.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if mode_of(x) is Mode.EXACT:
        return Fraction(x) ** p
    result = 1.0
    base = x
    while p:
        if p & 1:
            result *= base
        p >>= 1
        if p:
            base *= base
    return result


def bit_limit():
    """Bit-size guard, overridable through ``RATREC_BITLIMIT``."""
    raw = os.environ.get("RATREC_BITLIMIT")
    if raw is None or not raw.strip():
        return DEFAULT_BIT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise MalformedNumber(f"RATREC_BITLIMIT must be an integer, got {raw!r}") from None
    if value <= 0:
        raise MalformedNumber("RATREC_BITLIMIT must be positive")
    return value


def check_size(x, limit=None):
    """Raise ExactBlowup when an exact value's numerator or denominator is too wide."""
    if isinstance(x, float):
        return x
    if limit is None:
        limit = bit_limit()
    bits = max(abs(x.numerator).bit_length(), x.denominator.bit_length())
    if bits > limit:
        raise ExactBlowup(bits, limit)
    return x


def is_finite(x):
    return not isinstance(x, float) or math.isfinite(x)
