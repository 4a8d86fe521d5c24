"""
Riemann and Hurwitz zeta values for real s > 1 by Euler-Maclaurin summation.

    zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
                 + sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1} + R

The remainder is bounded by |T_{J+1}| (s+2J+1)/(s+2J), where T_{J+1} is the first omitted
correction term, and folded into the radius.
"""

import logging
import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from src.config.constants import Constants
from src.exact.numbers import bernoulli_numbers
from src.kernel.bracket import Bracket, Number, bracket_sum, to_bracket, up_mul
from src.kernel.elementary import power_real
from src.kernel.precision import default_target_eps, working_precision
from src.models.series_value import SeriesMethod, SeriesValue
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)

_caps = {'max_n': Constants.EM_MAX_N, 'max_j': Constants.EM_MAX_J}


@contextmanager
def euler_maclaurin_caps(max_n: Optional[int] = None, max_j: Optional[int] = None) -> Iterator[None]:
    """
    Set the caps on N and J for every Euler-Maclaurin evaluation in the block that does not
    pass its own. None keeps the cap currently in effect.
    """
    previous = dict(_caps)
    if max_n is not None:
        _caps['max_n'] = max_n
    if max_j is not None:
        _caps['max_j'] = max_j
    try:
        yield
    finally:
        _caps.update(previous)


def check_real_exponent(s: Number) -> Bracket:
    """Enclose s and require s > 1 over the whole enclosure."""
    s = to_bracket(s)
    if not s.lower() > 1:
        raise InvalidParameterError(f"s must be a real number > 1, got {s}")
    return s


def check_shift(a) -> Fraction:
    """Require a rational shift 0 < a <= 1."""
    try:
        a = Fraction(a)
    except (TypeError, ValueError):
        raise InvalidParameterError(f"a must be a rational number, got {a!r}")
    if not 0 < a <= 1:
        raise InvalidParameterError(f"a must satisfy 0 < a <= 1, got {a}")
    return a


def _correction_terms(s: Bracket, x: Bracket, x_pow: Bracket, eps: mpf,
                      max_j: int) -> Tuple[list, mpf, bool]:
    """
    Bernoulli correction terms T_1..T_J and the remainder bound.

    Args:
        s: Exponent
        x: N + a
        x_pow: x^{-s-1}, the power that goes with T_1
        eps: Target for the remainder bound
        max_j: Largest J considered

    Returns:
        (terms, remainder bound, whether the bound met eps)
    """
    bernoulli = bernoulli_numbers(2 * max_j + 2)
    x_squared = x * x
    pochhammer = s
    power = x_pow
    terms = []
    previous_size = None
    while True:
        j = len(terms) + 1
        coefficient = Bracket.exact(bernoulli[2 * j] / math.factorial(2 * j))
        term = coefficient * pochhammer * power
        size = term.magnitude()
        big_j = j - 1
        factor = (s + (2 * big_j + 1)) / (s + 2 * big_j)
        bound = up_mul(size, factor.upper())
        if bound <= eps:
            return terms, bound, True
        if (previous_size is not None and size >= previous_size) or j > max_j:
            # asymptotic divergence, or past the caps: stop with what we have
            return terms, bound, False
        terms.append(term)
        previous_size = size
        pochhammer = pochhammer * (s + (2 * j - 1)) * (s + 2 * j)
        power = power / x_squared


def _euler_maclaurin(s: Bracket, a: Fraction, n_terms: int, eps: mpf, max_j: int):
    head = bracket_sum(power_real(Bracket.exact(n + a), -s) for n in range(n_terms))
    x = Bracket.exact(n_terms + a)
    x_neg_s = power_real(x, -s)
    integral = x_neg_s * x / (s - 1)
    half = x_neg_s.scale2(-1)
    terms, remainder, met = _correction_terms(s, x, x_neg_s / x, eps, max_j)
    value = bracket_sum([head, integral, half] + terms).widen(remainder)
    return value, remainder, len(terms), met


def hurwitz_zeta(s: Number, a, precision: Optional[int] = None, target_eps: Optional[mpf] = None,
                 max_n: Optional[int] = None, max_j: Optional[int] = None) -> SeriesValue:
    """
    Enclose zeta(s, a) = sum_{n>=0} (n+a)^{-s} for real s > 1 and rational 0 < a <= 1.

    N starts at max(10, ceil(s)) + P/8 and doubles whenever the correction terms start
    growing before the remainder bound reaches target_eps.

    Args:
        s: Real exponent > 1
        a: Rational shift in (0, 1]
        precision: Working precision in bits (None: current)
        target_eps: Remainder target (None: 2^{-P/2})
        max_n: Cap on N (None: the cap set by euler_maclaurin_caps)
        max_j: Cap on J (None: likewise)

    Returns:
        SeriesValue with method euler_maclaurin; target_met is False when the caps were hit,
        in which case the radius still holds the achieved bound
    """
    bits = precision or mp.prec
    a = check_shift(a)
    max_n = _caps['max_n'] if max_n is None else max_n
    max_j = _caps['max_j'] if max_j is None else max_j
    with working_precision(bits):
        s = check_real_exponent(s)
        eps = mpf(target_eps) if target_eps is not None else default_target_eps(bits)
        n_terms = max(Constants.EM_MIN_N, int(mpmath.ceil(s.upper()))) + bits // 8
        n_terms = min(n_terms, max_n)
        while True:
            value, remainder, big_j, met = _euler_maclaurin(s, a, n_terms, eps, max_j)
            if met or n_terms >= max_n:
                break
            logger.debug(f"Euler-Maclaurin bound {mpmath.nstr(remainder, 5)} above target at N={n_terms}, doubling N")
            n_terms = min(2 * n_terms, max_n)

    if not met:
        logger.warning(f"zeta({s.mid}, {a}) reached remainder {mpmath.nstr(remainder, 5)}, "
                       f"target {mpmath.nstr(eps, 5)} (N={n_terms}, J={big_j})")
    else:
        logger.debug(f"zeta({mpmath.nstr(s.mid, 10)}, {a}): N={n_terms}, J={big_j}")
    return SeriesValue(value=value, terms_used=n_terms, tail_bound=remainder,
                       method=SeriesMethod.EULER_MACLAURIN, target_met=met,
                       details={'N': n_terms, 'J': big_j})


def em_enclosure(s: Number, a, n_terms: int, big_j: int, precision: Optional[int] = None) -> SeriesValue:
    """
    Euler-Maclaurin with caller-fixed N and J (no adaptivity); used for self-consistency checks.

    Args:
        s: Real exponent > 1
        a: Rational shift in (0, 1]
        n_terms: N
        big_j: J
        precision: Working precision in bits

    Returns:
        SeriesValue whose tail_bound is the remainder bound at (N, J)
    """
    bits = precision or mp.prec
    a = check_shift(a)
    if n_terms < 1 or big_j < 0:
        raise InvalidParameterError(f"need N >= 1 and J >= 0, got N={n_terms}, J={big_j}")
    with working_precision(bits):
        s = check_real_exponent(s)
        head = bracket_sum(power_real(Bracket.exact(n + a), -s) for n in range(n_terms))
        x = Bracket.exact(n_terms + a)
        x_neg_s = power_real(x, -s)
        parts = [head, x_neg_s * x / (s - 1), x_neg_s.scale2(-1)]
        bernoulli = bernoulli_numbers(2 * big_j + 2)
        pochhammer = s
        power = x_neg_s / x
        for j in range(1, big_j + 2):
            term = Bracket.exact(bernoulli[2 * j] / math.factorial(2 * j)) * pochhammer * power
            if j == big_j + 1:
                factor = (s + (2 * big_j + 1)) / (s + 2 * big_j)
                remainder = up_mul(term.magnitude(), factor.upper())
                break
            parts.append(term)
            pochhammer = pochhammer * (s + (2 * j - 1)) * (s + 2 * j)
            power = power / (x * x)
        value = bracket_sum(parts).widen(remainder)
    return SeriesValue(value=value, terms_used=n_terms, tail_bound=remainder,
                       method=SeriesMethod.EULER_MACLAURIN, details={'N': n_terms, 'J': big_j})


def riemann_zeta(s: Number, precision: Optional[int] = None, target_eps: Optional[mpf] = None,
                 max_n: Optional[int] = None, max_j: Optional[int] = None) -> SeriesValue:
    """zeta(s) = zeta(s, 1)."""
    return hurwitz_zeta(s, 1, precision=precision, target_eps=target_eps, max_n=max_n, max_j=max_j)
