"""
Registry of identity verifiers, their default parameter grids, and the suite runner.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from src.config.constants import Constants
from src.identities import hurwitz_identities, series_identities
from src.models.verification_report import VerificationReport
from src.utils.error_handler import InvalidParameterError, UnknownIdentityError
from src.zeta.hurwitz import euler_maclaurin_caps

logger = logging.getLogger(__name__)

ALL = "all"

# Grid axes
AXIS_K = "k"
AXIS_S = "s"
AXIS_NONE = "none"


@dataclass(frozen=True)
class IdentityEntry:
    """
    A registered verifier.

    Attributes:
        identity_id: Id used on the command line
        verifier: Function returning a VerificationReport
        axis: Which grid flag (--k or --s) the verifier is swept over
        direct_sum: True when the verifier sums a Dirichlet series directly (takes N, chunk size, workers)
        exact: True when the verifier runs in exact rationals (no precision)
        description: One-line summary
    """

    identity_id: str
    verifier: Callable[..., VerificationReport]
    axis: str
    direct_sum: bool = False
    exact: bool = False
    description: str = ""


REGISTRY: Dict[str, IdentityEntry] = {entry.identity_id: entry for entry in [
    IdentityEntry(Constants.IDENTITY_LEMMA1, hurwitz_identities.verify_lemma1, AXIS_K,
                  description="zeta(2k+1, 3/4) in terms of zeta(2k+1) and pi^{2k+1}"),
    IdentityEntry(Constants.IDENTITY_POLYGAMMA, hurwitz_identities.verify_polygamma, AXIS_K,
                  description="closed-form psi^{(2k)}(3/4) against the Hurwitz route"),
    IdentityEntry(Constants.IDENTITY_DELTA, series_identities.verify_delta_relation, AXIS_S, direct_sum=True,
                  description="(1 - 2^{-s}) delta(s) = 4^{-s} zeta(s, 3/4)"),
    IdentityEntry(Constants.IDENTITY_SPLIT, series_identities.verify_split_exact, AXIS_S, exact=True,
                  description="even/odd splitting of the paperfolding series, exact"),
    IdentityEntry(Constants.IDENTITY_LEMMA4, series_identities.verify_lemma4, AXIS_K, direct_sum=True,
                  description="(2^{4k+1} - 2^{2k}) sum (2b_n - 1)/n^{2k+1} = -c_k pi^{2k+1}"),
    IdentityEntry(Constants.IDENTITY_LEMMA4_NUMERATOR, series_identities.verify_lemma4_numerator, AXIS_K,
                  exact=True, description="R(n;k) = (2^{4k+1} - 2^{2k})(2b_n - 1), exact"),
    IdentityEntry(Constants.IDENTITY_COROLLARY, series_identities.verify_corollary, AXIS_K, direct_sum=True,
                  description="sum beta_n / n^{2k+1} in closed form"),
    IdentityEntry(Constants.IDENTITY_TOTH, series_identities.verify_toth, AXIS_S, direct_sum=True,
                  description="sum ((2^s+1) t_{n-1} + (2^s-1) t_n)/n^s = 2^s zeta(s)"),
    IdentityEntry(Constants.IDENTITY_THEOREM1, series_identities.verify_theorem1, AXIS_K, direct_sum=True,
                  description="zeta(2k+1) - c_k pi^{2k+1} = sum N(n;k)/n^{2k+1}"),
    IdentityEntry(Constants.IDENTITY_THEOREM1_COEFFICIENTS, series_identities.verify_theorem1_coefficients,
                  AXIS_K, exact=True, description="N(n;k) decomposition, exact"),
    IdentityEntry(Constants.IDENTITY_AC_RATIO, series_identities.verify_allouche_cohen_ratio, AXIS_S,
                  direct_sum=True, description="shifted Thue-Morse series as a multiple of the plain one"),
    IdentityEntry(Constants.IDENTITY_AC_RECURSION, series_identities.verify_allouche_cohen_recursion, AXIS_S,
                  direct_sum=True, description="recursion over s+k for the shifted Thue-Morse series"),
    IdentityEntry(Constants.IDENTITY_EULER_EVEN, hurwitz_identities.verify_euler_even, AXIS_K,
                  description="zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)"),
    IdentityEntry(Constants.IDENTITY_RAMANUJAN, hurwitz_identities.verify_ramanujan_zeta3, AXIS_NONE,
                  description="zeta(3) by the exponentially convergent series"),
    IdentityEntry(Constants.IDENTITY_PLOUFFE, hurwitz_identities.verify_plouffe_zeta7, AXIS_NONE,
                  description="zeta(7) by the exponentially convergent series"),
    IdentityEntry(Constants.IDENTITY_CATALAN, hurwitz_identities.verify_catalan, AXIS_NONE,
                  description="zeta(2, 3/4) = pi^2 - 8C"),
    IdentityEntry(Constants.IDENTITY_ODD_SHIFTS, hurwitz_identities.verify_odd_shift_pair, AXIS_S,
                  description="zeta(s, 1/4) + zeta(s, 3/4) = 4^s (1 - 2^{-s}) zeta(s)"),
]}


def identity_ids() -> List[str]:
    return list(REGISTRY)


def default_terms(s) -> int:
    """N = 10^6 below s = 3, 10^5 from s = 3 on."""
    return Constants.LARGE_TERMS if Fraction(str(s)) < 3 else Constants.SMALL_TERMS


def resolve_selection(selection: Iterable[str]) -> List[str]:
    """
    Expand "all" and validate identity ids.

    Args:
        selection: Identity ids, possibly including "all"

    Returns:
        Registered ids in registry order, without duplicates

    Raises:
        InvalidParameterError: if the selection is empty
        UnknownIdentityError: if an id is not registered
    """
    selection = list(selection)
    if not selection:
        raise InvalidParameterError("identity selection must not be empty")
    if ALL in selection:
        return identity_ids()
    for identity_id in selection:
        if identity_id not in REGISTRY:
            raise UnknownIdentityError(Constants.ERROR_UNKNOWN_IDENTITY.format(
                identity_id, ", ".join([ALL] + identity_ids())))
    return [identity_id for identity_id in REGISTRY if identity_id in selection]


def default_grid(identity_id: str, k_values: Optional[Sequence[int]] = None,
                 s_values: Optional[Sequence[str]] = None, terms: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    Parameter points for one identity.

    Negative controls are part of the default grid only; they are left out as soon as the
    grid is narrowed with k_values or s_values.

    Args:
        identity_id: Registered id
        k_values: Override of the k axis
        s_values: Override of the s axis (decimal strings)
        terms: Override of N for direct sums

    Returns:
        List of keyword-argument dicts for the verifier
    """
    if identity_id not in REGISTRY:
        raise UnknownIdentityError(Constants.ERROR_UNKNOWN_IDENTITY.format(identity_id, ", ".join(identity_ids())))
    narrowed = k_values is not None or s_values is not None
    ks = list(k_values) if k_values is not None else list(Constants.DEFAULT_K_VALUES)

    def n_for(s) -> int:
        return terms if terms is not None else default_terms(s)

    if identity_id in (Constants.IDENTITY_LEMMA1, Constants.IDENTITY_POLYGAMMA, Constants.IDENTITY_EULER_EVEN):
        return [{'k': k} for k in ks]
    if identity_id in (Constants.IDENTITY_LEMMA4, Constants.IDENTITY_THEOREM1):
        return [{'k': k, 'n_terms': n_for(2 * k + 1)} for k in ks]
    if identity_id == Constants.IDENTITY_COROLLARY:
        grid = [{'k': k, 'n_terms': n_for(2 * k + 1)} for k in ks]
        if not narrowed:
            grid.append({'k': 1, 'n_terms': n_for(3), 'literal': True})
        return grid
    if identity_id in (Constants.IDENTITY_LEMMA4_NUMERATOR, Constants.IDENTITY_THEOREM1_COEFFICIENTS):
        return [{'k': k, 'n_max': terms or Constants.COEFFICIENT_CHECK_TERMS} for k in ks]
    if identity_id == Constants.IDENTITY_SPLIT:
        s_grid = _split_exponents(s_values) if s_values is not None else Constants.SPLIT_S_VALUES
        n_grid = [terms] if terms is not None else Constants.SPLIT_N_VALUES
        return [{'s': s, 'n_terms': n} for s in s_grid for n in n_grid]

    defaults = {
        Constants.IDENTITY_DELTA: Constants.DELTA_S_VALUES,
        Constants.IDENTITY_TOTH: Constants.TOTH_S_VALUES,
        Constants.IDENTITY_AC_RATIO: Constants.AC_S_VALUES,
        Constants.IDENTITY_ODD_SHIFTS: Constants.DEFAULT_S_VALUES,
    }
    if identity_id in defaults:
        s_grid = list(s_values) if s_values is not None else defaults[identity_id]
        if identity_id == Constants.IDENTITY_ODD_SHIFTS:
            return [{'s': s} for s in s_grid]
        if identity_id == Constants.IDENTITY_AC_RATIO:
            return [{'s': s, 'n_terms': terms or Constants.LARGE_TERMS} for s in s_grid]
        return [{'s': s, 'n_terms': n_for(s)} for s in s_grid]
    if identity_id == Constants.IDENTITY_AC_RECURSION:
        n = terms or Constants.LARGE_TERMS
        if s_values is not None:
            return [{'s': s, 'outer_terms': Constants.AC_RECURSION_K, 'n_terms': n} for s in s_values]
        grid = [{'s': "2", 'outer_terms': Constants.AC_RECURSION_K, 'n_terms': n},
                {'s': "3", 'outer_terms': Constants.AC_RECURSION_K_TIGHT, 'n_terms': n}]
        if not narrowed:
            grid.append({'s': "2", 'outer_terms': 0, 'n_terms': n})
        return grid
    if identity_id == Constants.IDENTITY_RAMANUJAN:
        grid = [{}]
        if not narrowed:
            grid.append({'terms': 1, 'rigorous_tail': False})
        return grid
    if identity_id == Constants.IDENTITY_PLOUFFE:
        grid = [{}]
        if not narrowed:
            grid.append({'printed_constant': True})
        return grid
    if identity_id == Constants.IDENTITY_CATALAN:
        return [{'route': hurwitz_identities.CATALAN_ROUTE_SHIFTS},
                {'route': hurwitz_identities.CATALAN_ROUTE_CONSTANT}]
    raise UnknownIdentityError(Constants.ERROR_UNKNOWN_IDENTITY.format(identity_id, ", ".join(identity_ids())))


def _split_exponents(s_values: Sequence[str]) -> List[int]:
    """
    Integer exponents for the exact split. Non-integer values, which the other s-axis
    identities accept, are skipped; when none are left the default exponents are used.
    """
    exponents = []
    for value in s_values:
        exact = Fraction(str(value))
        if exact.denominator == 1 and exact > 1:
            exponents.append(int(exact))
        else:
            logger.warning(f"split runs on integer s > 1 only, skipping s={value}")
    if not exponents:
        logger.warning(f"no integer s left for split, using {Constants.SPLIT_S_VALUES}")
        return list(Constants.SPLIT_S_VALUES)
    return exponents


def run_suite(selection: Iterable[str], grid: Optional[Dict[str, List[Dict[str, Any]]]] = None,
              precision: Optional[int] = None, chunk_size: Optional[int] = None,
              workers: Optional[int] = None, max_n: Optional[int] = None,
              max_j: Optional[int] = None) -> List[VerificationReport]:
    """
    Run the selected verifiers over their grids.

    Args:
        selection: Identity ids (or "all")
        grid: Per-identity parameter points; identities missing here use default_grid
        precision: Working precision in bits for every non-exact verifier
        chunk_size: Chunk length for direct sums
        workers: Worker processes for direct sums
        max_n: Euler-Maclaurin cap on N for every zeta evaluation in the run
        max_j: Euler-Maclaurin cap on J

    Returns:
        Reports ordered by (identity_id, parameters)
    """
    identity_list = resolve_selection(selection)
    grid = grid or {}
    reports = []
    with euler_maclaurin_caps(max_n, max_j):
        for identity_id in identity_list:
            entry = REGISTRY[identity_id]
            points = grid.get(identity_id)
            if points is None:
                points = default_grid(identity_id)
            logger.info(f"Verifying {identity_id} at {len(points)} parameter point(s)")
            for point in points:
                kwargs = dict(point)
                if not entry.exact:
                    kwargs['precision'] = precision
                if entry.direct_sum:
                    kwargs['chunk_size'] = chunk_size
                    kwargs['workers'] = workers
                reports.append(entry.verifier(**kwargs))

    reports.sort(key=VerificationReport.sort_key)
    failures = [report for report in reports if not report.as_expected]
    logger.info(f"Suite finished: {len(reports)} report(s), {len(failures)} unexpected outcome(s)")
    return reports
