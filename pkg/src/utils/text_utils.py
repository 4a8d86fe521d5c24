"""
Utility functions for rendering high-precision numbers as decimal text.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

import mpmath
from mpmath import mp

from src.kernel.precision import decimal_digits

logger = logging.getLogger(__name__)


def _carried_digits() -> int:
    return decimal_digits(mp.prec)


def decimal_string(value: Union[mpmath.mpf, int], digits: Optional[int] = None) -> str:
    """
    Render a number as a decimal string with a given number of significant digits.

    Args:
        value: Number to render
        digits: Significant digits, or None for everything the current precision carries

    Returns:
        Decimal string (scientific notation only for very large or very small magnitudes)
    """
    n = digits or _carried_digits()
    return mpmath.nstr(mpmath.mpf(value), n, strip_zeros=False, min_fixed=-30, max_fixed=60)


def fixed_point(value: mpmath.mpf, decimals: int) -> str:
    """
    Round a number to a fixed number of decimals.

    Args:
        value: Number to render
        decimals: Digits after the decimal point (>= 0)

    Returns:
        Fixed-point string such as "-1.1035"
    """
    scaled = int(mpmath.nint(mpmath.mpf(value) * mpmath.mpf(10) ** decimals))
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled))
    if decimals == 0:
        return sign + body
    body = body.rjust(decimals + 1, "0")
    return f"{sign}{body[:-decimals]}.{body[-decimals:]}"


def certified_decimals(radius: mpmath.mpf) -> int:
    """
    Number of decimals that a radius still certifies.

    A digit at position 10^{-d} is printed only when 10^{-d} >= radius, so no displayed
    digit lies below the error bound.
    """
    cap = _carried_digits()
    if radius <= 0:
        return cap
    decimals = int(mpmath.floor(-mpmath.log10(radius)))
    return max(0, min(decimals, cap))


def certified_string(mid: mpmath.mpf, radius: mpmath.mpf) -> str:
    """Render a midpoint with only the digits its radius certifies."""
    return fixed_point(mid, certified_decimals(radius))


def rational_string(value: Union[int, Fraction]) -> str:
    """Render an exact integer or fraction as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
