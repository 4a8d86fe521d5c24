"""
Direct summation of Dirichlet series with bounded exact coefficients, and delta(s) through
its functional equation.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath
from mpmath import mp, mpf

from src.config.constants import Constants
from src.kernel.bracket import Bracket, Number, ZERO, bracket_sum, inflate, up_add, up_mul
from src.kernel.elementary import power_real
from src.kernel.precision import working_precision
from src.models.series_value import SeriesMethod, SeriesValue
from src.sequences.streams import CoefficientStream
from src.utils.error_handler import InvalidParameterError
from src.zeta.hurwitz import check_real_exponent, hurwitz_zeta

logger = logging.getLogger(__name__)

ChunkTask = Tuple[Tuple[CoefficientStream, ...], Bracket, int, int, int]


def _integer_exponent(s: Bracket) -> Optional[int]:
    if s.rad == 0 and mpmath.isint(s.mid):
        return int(s.mid)
    return None


def _chunk_sums(streams: Sequence[CoefficientStream], s: Bracket, start: int, stop: int) -> List[Bracket]:
    """
    Enclose sum_{start <= n < stop} a_n n^{-s} for each stream.

    Terms are grouped by their exact coefficient; each group is a sum of positive powers,
    so nearest-rounded accumulation stays within (allowance + count + 1) ulps of the group sum.
    Groups are then scaled by their coefficient in ascending coefficient order.
    """
    integer = _integer_exponent(s)
    allowance = Constants.INTEGER_POWER_ULPS if integer is not None else Constants.REAL_POWER_ULPS
    neg_s = -s.mid
    groups = [{} for _ in streams]

    for n in range(start, stop):
        coefficients = [stream.coefficient(n) for stream in streams]
        if not any(coefficients):
            continue
        if integer is not None:
            term = mpf(1) / mpf(n) ** integer
        else:
            term = mpf(n) ** neg_s
        for group, coefficient in zip(groups, coefficients):
            if not coefficient:
                continue
            entry = group.get(coefficient)
            if entry is None:
                group[coefficient] = [term, 1]
            else:
                entry[0] += term
                entry[1] += 1

    # n^{-s'} for s' within s.rad of s.mid differs from n^{-s} by at most n^{-s} expm1(rad ln n)
    spread = inflate(mpmath.expm1(s.rad * mpmath.log(stop - 1))) if s.rad else ZERO

    results = []
    for group in groups:
        total = Bracket.exact(0)
        for coefficient in sorted(group):
            group_sum, count = group[coefficient]
            rad = inflate(up_mul(mpf(allowance + count + 1), mpmath.ldexp(group_sum, 1 - mp.prec)))
            if spread:
                rad = up_add(rad, inflate(up_mul(group_sum, spread)))
            total = total + Bracket.exact(coefficient) * Bracket(group_sum, rad)
        results.append(total)
    return results


def _chunk_worker(task: ChunkTask) -> List[Bracket]:
    """Evaluate one chunk at the caller's precision; module-level so worker processes can load it."""
    streams, s, start, stop, bits = task
    with mpmath.workprec(bits):
        return _chunk_sums(streams, s, start, stop)


def integral_tail_bound(s: Number, n_terms: int) -> mpf:
    """
    Upper bound on sum_{n>N} n^{-s} <= N^{1-s}/(s-1), taken at the lower edge of s.

    Args:
        s: Exponent > 1
        n_terms: N

    Returns:
        Bound rounded upward
    """
    s = check_real_exponent(s)
    low = Bracket(s.lower())
    return (power_real(n_terms, 1 - low) / (low - 1)).upper()


def dirichlet_series_many(streams: Sequence[CoefficientStream], s: Number, n_terms: int,
                          precision: Optional[int] = None,
                          chunk_size: int = Constants.DEFAULT_CHUNK_SIZE,
                          workers: int = Constants.DEFAULT_WORKERS) -> List[SeriesValue]:
    """
    Sum several Dirichlet series at the same s in one pass, sharing the powers n^{-s}.

    Args:
        streams: Coefficient streams
        s: Real exponent > 1
        n_terms: N >= 1, number of terms summed explicitly
        precision: Working precision in bits
        chunk_size: Fixed chunk length for the deterministic reduction
        workers: Worker processes for the chunks (1: in-process); never changes the result bits

    Returns:
        One SeriesValue per stream, in order
    """
    if not isinstance(n_terms, int) or n_terms < 1:
        raise InvalidParameterError(f"N must be a positive integer, got {n_terms!r}")
    if not streams:
        raise InvalidParameterError("at least one coefficient stream is required")
    if not isinstance(chunk_size, int) or chunk_size < 1:
        raise InvalidParameterError(f"chunk size must be a positive integer, got {chunk_size!r}")
    bits = precision or mp.prec
    streams = tuple(streams)

    with working_precision(bits):
        s = check_real_exponent(s)
        tasks = [(streams, s, start, min(start + chunk_size, n_terms + 1), bits)
                 for start in range(1, n_terms + 1, chunk_size)]
        names = ", ".join(stream.name for stream in streams)
        logger.debug(f"Summing {names} at s={mpmath.nstr(s.mid, 10)}: "
                     f"{n_terms} terms in {len(tasks)} chunks of {chunk_size}")

        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                chunk_results = list(executor.map(_chunk_worker, tasks))
        else:
            chunk_results = []
            for index, task in enumerate(tasks):
                chunk_results.append(_chunk_worker(task))
                if (index + 1) % 64 == 0:
                    logger.debug(f"Summed chunk {index + 1}/{len(tasks)}")

        unit_tail = integral_tail_bound(s, n_terms)
        values = []
        for index, stream in enumerate(streams):
            tail = up_mul(Bracket.exact(stream.bound).upper(), unit_tail)
            total = bracket_sum((chunk[index] for chunk in chunk_results), extra_tail=Bracket(ZERO, tail),
                                chunk_size=chunk_size)
            values.append(SeriesValue(value=total, terms_used=n_terms, tail_bound=tail,
                                      method=SeriesMethod.DIRECT_PARTIAL_SUM,
                                      details={'stream': stream.name, 'chunk_size': chunk_size}))
    return values


def dirichlet_series(stream: CoefficientStream, s: Number, n_terms: int, precision: Optional[int] = None,
                     chunk_size: int = Constants.DEFAULT_CHUNK_SIZE,
                     workers: int = Constants.DEFAULT_WORKERS) -> SeriesValue:
    """
    Enclose sum_{n>=1} a_n n^{-s} by the partial sum to N plus the tail bound A N^{1-s}/(s-1).

    Args:
        stream: Coefficient stream with uniform bound A
        s: Real exponent > 1
        n_terms: N >= 1
        precision: Working precision in bits
        chunk_size: Fixed chunk length
        workers: Worker processes

    Returns:
        SeriesValue with method direct_partial_sum
    """
    return dirichlet_series_many([stream], s, n_terms, precision=precision, chunk_size=chunk_size,
                                 workers=workers)[0]


def delta_via_functional_equation(s: Number, precision: Optional[int] = None,
                                  target_eps: Optional[mpf] = None,
                                  max_n: Optional[int] = None,
                                  max_j: Optional[int] = None) -> SeriesValue:
    """
    delta(s) = sum b_n n^{-s} = 4^{-s} zeta(s, 3/4) / (1 - 2^{-s}).

    Args:
        s: Real exponent > 1
        precision: Working precision in bits
        target_eps: Target for the Hurwitz evaluation

    Returns:
        SeriesValue with method functional_equation
    """
    bits = precision or mp.prec
    with working_precision(bits):
        s = check_real_exponent(s)
        zeta = hurwitz_zeta(s, Fraction(3, 4), precision=bits, target_eps=target_eps, max_n=max_n, max_j=max_j)
        value = power_real(4, -s) * zeta.value / (1 - power_real(2, -s))
    return SeriesValue(value=value, terms_used=zeta.terms_used, tail_bound=zeta.tail_bound,
                       method=SeriesMethod.FUNCTIONAL_EQUATION, target_met=zeta.target_met,
                       details=dict(zeta.details))
