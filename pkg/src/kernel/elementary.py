"""
Elementary functions on brackets: pi, exp, ln, cosh, real powers and generalized binomials.

Midpoints come from mpmath at the current precision. Propagated radii use mean-value
bounds; each function result is charged two ulps for mpmath's own rounding, and bounds
computed in nearest rounding are inflated before they join a radius.
"""

import logging
from math import factorial
from typing import Optional

import mpmath
from mpmath import mpf

from src.kernel.bracket import Bracket, Number, ZERO, inflate, to_bracket, ulp, up_add, up_mul
from src.kernel.precision import working_precision
from src.utils.error_handler import DomainError, InvalidParameterError

logger = logging.getLogger(__name__)

FUNCTION_ULPS = 2


def _finish(mid: mpf, propagated: mpf) -> Bracket:
    slop = up_mul(mpf(FUNCTION_ULPS), ulp(mid))
    return Bracket(mid, up_add(inflate(propagated), slop))


def pi(precision: Optional[int] = None) -> Bracket:
    """
    Enclosure of pi.

    Args:
        precision: Bits; None means the current precision

    Returns:
        Bracket containing pi with a radius of two ulps
    """
    if precision is None:
        mid = +mpmath.pi
        return Bracket(mid, up_mul(mpf(2), ulp(mid)))
    with working_precision(precision):
        mid = +mpmath.pi
        return Bracket(mid, up_mul(mpf(2), ulp(mid)))


def exp(x: Number) -> Bracket:
    """exp over a bracket: |exp(y) - exp(m)| <= exp(m) (exp(r) - 1)."""
    x = to_bracket(x)
    mid = mpmath.exp(x.mid)
    propagated = up_mul(mid, mpmath.expm1(x.rad)) if x.rad else ZERO
    return _finish(mid, propagated)


def ln(x: Number) -> Bracket:
    """Natural logarithm; the whole interval must be strictly positive."""
    x = to_bracket(x)
    if not x.is_positive():
        raise DomainError(f"ln needs a strictly positive bracket, got {x}")
    mid = mpmath.log(x.mid)
    # worst case sits at the lower edge: ln(m) - ln(m - r) = -log1p(-r/m)
    propagated = abs(mpmath.log1p(-x.rad / x.mid)) if x.rad else ZERO
    return _finish(mid, propagated)


def cosh(x: Number) -> Bracket:
    """Hyperbolic cosine: |cosh'(y)| <= sinh(|m| + r) on the interval."""
    x = to_bracket(x)
    mid = mpmath.cosh(x.mid)
    propagated = up_mul(mpmath.sinh(up_add(abs(x.mid), x.rad)), x.rad) if x.rad else ZERO
    return _finish(mid, propagated)


def _integer_value(s: Bracket) -> Optional[int]:
    if s.rad == 0 and mpmath.isint(s.mid):
        return int(s.mid)
    return None


def power_real(x: Number, s: Number) -> Bracket:
    """
    Enclosure of x^s for a strictly positive bracket x and real exponent s.

    Integer exponents use repeated squaring; other exponents go through exp(s ln x) so the
    error of both functions is propagated.

    Args:
        x: Base, strictly positive
        s: Exponent

    Returns:
        Bracket containing x^s

    Raises:
        DomainError: if x touches zero or negative values
    """
    x = to_bracket(x)
    s = to_bracket(s)
    if not x.is_positive():
        raise DomainError(f"power_real needs a strictly positive base, got {x}")
    integer = _integer_value(s)
    if integer is not None:
        return x.pow_int(integer)
    return exp(s * ln(x))


def generalized_binomial(s: Number, k: int) -> Bracket:
    """
    C(s + k - 1, k) = s (s+1) ... (s+k-1) / k! as a finite product.

    Args:
        s: Real parameter
        k: Nonnegative integer

    Returns:
        Bracket containing the binomial
    """
    if not isinstance(k, int) or k < 0:
        raise InvalidParameterError(f"k must be a nonnegative integer, got {k!r}")
    s = to_bracket(s)
    product = Bracket.exact(1)
    for j in range(k):
        product = product * (s + j)
    return product / factorial(k)
