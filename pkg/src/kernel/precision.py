"""
Working-precision helpers on top of mpmath's context.
"""

import math
from contextlib import contextmanager
from typing import Iterator

import mpmath

from src.config.constants import Constants
from src.utils.error_handler import InvalidParameterError


def check_precision(bits: int) -> int:
    """Validate a precision in bits and return it."""
    if not isinstance(bits, int) or bits < Constants.MIN_PRECISION_BITS:
        raise InvalidParameterError(
            f"precision must be an integer >= {Constants.MIN_PRECISION_BITS} bits, got {bits!r}")
    return bits


def precision_for_digits(digits: int) -> int:
    """Working precision for a target number of decimal digits: 4 bits per digit plus guard bits."""
    return digits * Constants.BITS_PER_DIGIT + Constants.GUARD_BITS


@contextmanager
def working_precision(bits: int) -> Iterator[int]:
    """
    Run a block at the given binary precision.

    Args:
        bits: Precision in bits

    Yields:
        The precision in effect
    """
    check_precision(bits)
    with mpmath.workprec(bits):
        yield bits


def default_target_eps(bits: int) -> mpmath.mpf:
    """2^{-P/2}: half the bits go to truncation, half to rounding."""
    return mpmath.ldexp(mpmath.mpf(1), -(bits // 2))


def tight_target_eps(bits: int) -> mpmath.mpf:
    """Truncation target for closed-form checks, a few bytes short of full precision."""
    return mpmath.ldexp(mpmath.mpf(1), -(bits - Constants.TIGHT_EPS_MARGIN_BITS))


def decimal_digits(bits: int) -> int:
    """Decimal digits carried by a binary precision."""
    return int(math.ceil(bits * math.log10(2))) + 1
