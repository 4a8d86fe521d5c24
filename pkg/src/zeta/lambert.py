"""
The exponentially convergent series S_m = 2 sum_{j>=1} 1 / (j^m (e^{2 pi j} - 1)) that appears
in the closed forms zeta(3) = 7/180 pi^3 - S_3 and zeta(7) = 19/56700 pi^7 - S_7.
"""

import logging
from typing import Optional

from mpmath import mp, mpf

from src.config.constants import Constants
from src.kernel.bracket import Bracket, ZERO, bracket_sum
from src.kernel.elementary import exp, pi
from src.kernel.precision import default_target_eps, working_precision
from src.models.series_value import SeriesMethod, SeriesValue
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)


def lambert_tail_bound(m: int, terms: int) -> mpf:
    """
    2 sum_{j>K} 1/(j^m (e^{2 pi j} - 1)) <= 4 e^{-2 pi (K+1)} / ((K+1)^m (1 - e^{-2 pi})).

    Uses 1/(e^x - 1) <= 2 e^{-x} for x >= ln 2 and j^m >= (K+1)^m.
    """
    two_pi = pi().scale2(1)
    numerator = exp(-two_pi * (terms + 1)).scale2(2)
    denominator = Bracket.exact(terms + 1).pow_int(m) * (1 - exp(-two_pi))
    return (numerator / denominator).upper()


def lambert_series(m: int, terms: Optional[int] = None, precision: Optional[int] = None,
                   target_eps: Optional[mpf] = None, rigorous_tail: bool = True,
                   max_terms: int = Constants.LAMBERT_MAX_TERMS) -> SeriesValue:
    """
    Enclose S_m = 2 sum_{j>=1} 1/(j^m (e^{2 pi j} - 1)).

    Args:
        m: Positive integer power
        terms: Fixed number of terms K; None sums until the tail bound drops below target_eps
        precision: Working precision in bits
        target_eps: Tail target when terms is None (default 2^{-P/2})
        rigorous_tail: False leaves the tail bound out of the radius (truncation control)
        max_terms: Cap on K in adaptive mode

    Returns:
        SeriesValue with method direct_partial_sum
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m!r}")
    if terms is not None and (not isinstance(terms, int) or terms < 1):
        raise InvalidParameterError(f"terms must be a positive integer, got {terms!r}")
    bits = precision or mp.prec

    with working_precision(bits):
        eps = mpf(target_eps) if target_eps is not None else default_target_eps(bits)
        two_pi = pi().scale2(1)
        parts = []
        tail = None
        met = True
        j = 0
        while True:
            j += 1
            parts.append(Bracket.exact(j).pow_int(m) * (exp(two_pi * j) - 1))
            if terms is not None:
                if j == terms:
                    tail = lambert_tail_bound(m, j)
                    break
                continue
            tail = lambert_tail_bound(m, j)
            if tail <= eps:
                break
            if j >= max_terms:
                met = False
                logger.warning(f"Lambert series for m={m} stopped at {j} terms with tail {tail}")
                break
        value = bracket_sum(Bracket.exact(2) / denominator for denominator in parts)
        if rigorous_tail:
            value = value.widen(tail)
        else:
            logger.warning(f"Lambert series for m={m} summed to {j} terms without a tail bound")
    return SeriesValue(value=value, terms_used=j, tail_bound=tail if rigorous_tail else ZERO,
                       method=SeriesMethod.DIRECT_PARTIAL_SUM, target_met=met,
                       details={'m': m, 'rigorous_tail': rigorous_tail})
