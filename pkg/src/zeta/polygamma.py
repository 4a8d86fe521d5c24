"""
Polygamma values at rational points, by closed form at 3/4 and through Hurwitz zeta in general.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Optional

from mpmath import mp, mpf

from src.exact.coefficients import polygamma34_coefficients
from src.kernel.bracket import Bracket, up_mul
from src.kernel.elementary import pi
from src.kernel.precision import working_precision
from src.models.series_value import SeriesMethod, SeriesValue
from src.utils.error_handler import InvalidParameterError
from src.zeta.hurwitz import hurwitz_zeta, riemann_zeta

logger = logging.getLogger(__name__)


def _require_order(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")


def polygamma_34_series(k: int, precision: Optional[int] = None, target_eps: Optional[mpf] = None,
                        max_n: Optional[int] = None, max_j: Optional[int] = None) -> SeriesValue:
    """
    psi^{(2k)}(3/4) = 2^{2k-1} (pi^{2k+1} |E_{2k}| - 2 (2k)! (2^{2k+1} - 1) zeta(2k+1)).

    Args:
        k: Positive integer; the order is 2k
        precision: Working precision in bits
        target_eps: Target passed on to the zeta evaluation

    Returns:
        SeriesValue with method closed_form; terms, tail bound and target_met come from the
        zeta(2k+1) evaluation, the tail bound scaled by its coefficient
    """
    _require_order(k)
    bits = precision or mp.prec
    p, z = polygamma34_coefficients(k)
    with working_precision(bits):
        zeta = riemann_zeta(2 * k + 1, precision=bits, target_eps=target_eps, max_n=max_n, max_j=max_j)
        value = pi().pow_int(2 * k + 1) * p - zeta.value * z
        tail = up_mul(Bracket.exact(abs(z)).upper(), zeta.tail_bound)
    return SeriesValue(value=value, terms_used=zeta.terms_used, tail_bound=tail, method=SeriesMethod.CLOSED_FORM,
                       target_met=zeta.target_met, details={'k': k, **zeta.details})


def polygamma_34(k: int, precision: Optional[int] = None, target_eps: Optional[mpf] = None,
                 max_n: Optional[int] = None, max_j: Optional[int] = None) -> Bracket:
    """Enclosure of psi^{(2k)}(3/4) alone; see polygamma_34_series."""
    return polygamma_34_series(k, precision=precision, target_eps=target_eps, max_n=max_n, max_j=max_j).value


def polygamma_from_hurwitz(k: int, a, precision: Optional[int] = None, target_eps: Optional[mpf] = None,
                           max_n: Optional[int] = None, max_j: Optional[int] = None) -> Bracket:
    """
    psi^{(k)}(a) = (-1)^{k+1} k! zeta(k+1, a).

    Args:
        k: Positive order
        a: Rational point in (0, 1]
        precision: Working precision in bits
        target_eps: Target passed on to the Hurwitz evaluation

    Returns:
        Bracket containing psi^{(k)}(a)
    """
    _require_order(k)
    bits = precision or mp.prec
    with working_precision(bits):
        zeta = hurwitz_zeta(k + 1, Fraction(a), precision=bits, target_eps=target_eps,
                            max_n=max_n, max_j=max_j)
        return zeta.value * ((-1) ** (k + 1) * factorial(k))
