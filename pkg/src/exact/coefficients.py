"""
Exact coefficients of the closed forms for odd and even zeta values.
"""

from fractions import Fraction
from math import factorial

from src.exact.numbers import bernoulli_numbers, euler_numbers
from src.utils.error_handler import InvalidParameterError

# zeta(3) = 7/180 pi^3 - 2 sum 1/(j^3 (e^{2 pi j} - 1))
RAMANUJAN_ZETA3_COEFFICIENT = Fraction(7, 180)

# zeta(7) = 19/56700 pi^7 - 2 sum 1/(j^7 (e^{2 pi j} - 1))
PLOUFFE_ZETA7_COEFFICIENT = Fraction(19, 56700)

# Digits transposed in the printed form of the zeta(7) formula; the identity fails with it
PLOUFFE_ZETA7_PRINTED_COEFFICIENT = Fraction(19, 57600)


def _require_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")


def pi_coefficient(k: int) -> Fraction:
    """
    c_k = 2^{2k-1} |E_{2k}| / (2k)!, the multiple of pi^{2k+1} subtracted from zeta(2k+1).

    Args:
        k: Positive integer

    Returns:
        c_k as a Fraction (1, 5/3, 122/45, ...)
    """
    _require_k(k)
    return Fraction(2 ** (2 * k - 1) * euler_numbers(k).absolute(k), factorial(2 * k))


def lemma4_coefficient(k: int) -> int:
    """
    2^{4k+1} - 2^{2k} (28, 496, 8128, ...).

    Args:
        k: Positive integer

    Returns:
        The integer coefficient
    """
    _require_k(k)
    return 2 ** (4 * k + 1) - 2 ** (2 * k)


def corollary_denominator(k: int) -> int:
    """
    (2^{2k+2} - 2) (2k)!, the denominator of sum beta_n / n^{2k+1} over pi^{2k+1} |E_{2k}|.

    Args:
        k: Positive integer

    Returns:
        The integer denominator
    """
    _require_k(k)
    return (2 ** (2 * k + 2) - 2) * factorial(2 * k)


def hurwitz34_zeta_coefficient(k: int) -> int:
    """2^{2k} (2^{2k+1} - 1), the multiple of zeta(2k+1) in zeta(2k+1, 3/4)."""
    _require_k(k)
    return 2 ** (2 * k) * (2 ** (2 * k + 1) - 1)


def euler_even_coefficient(k: int) -> Fraction:
    """
    The rational r_k with zeta(2k) = r_k pi^{2k}, i.e. (-1)^{k+1} B_{2k} 2^{2k} / (2 (2k)!).

    Args:
        k: Positive integer

    Returns:
        r_k (1/6, 1/90, ...)
    """
    _require_k(k)
    b2k = bernoulli_numbers(2 * k)[2 * k]
    return (-1) ** (k + 1) * b2k * Fraction(2 ** (2 * k), 2 * factorial(2 * k))


def polygamma34_coefficients(k: int) -> tuple:
    """
    (p, z) with psi^{(2k)}(3/4) = p pi^{2k+1} - z zeta(2k+1).

    From psi^{(2k)}(3/4) = 2^{2k-1} (pi^{2k+1} |E_{2k}| - 2 (2k)! (2^{2k+1} - 1) zeta(2k+1)).
    """
    _require_k(k)
    scale = 2 ** (2 * k - 1)
    p = scale * euler_numbers(k).absolute(k)
    z = scale * 2 * factorial(2 * k) * (2 ** (2 * k + 1) - 1)
    return p, z
