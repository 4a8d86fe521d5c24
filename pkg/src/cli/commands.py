"""
Subcommand implementations. Each command renders its result, writes it to stdout or a file,
and returns the process exit code.
"""

import logging
import sys
from fractions import Fraction
from typing import List, Optional

from src.cli import parser as cli_parser
from src.cli.formatting import render_reports, render_rows, render_series_value
from src.config.app_config import AppConfig
from src.config.constants import Constants
from src.exact.coefficients import (corollary_denominator, lemma4_coefficient, pi_coefficient)
from src.exact.numbers import bernoulli_numbers, euler_numbers
from src.identities.suite import default_grid, resolve_selection, run_suite
from src.kernel.precision import working_precision
from src.models.series_value import SeriesMethod, SeriesValue
from src.sequences.automatic import first_index, sequence_value
from src.sequences.streams import CoefficientStream, StreamKind
from src.utils.error_handler import InvalidParameterError, PrecisionShortfallError
from src.utils.file_utils import FileUtils
from src.utils.text_utils import rational_string
from src.zeta.dirichlet import delta_via_functional_equation, dirichlet_series
from src.zeta.hurwitz import hurwitz_zeta, riemann_zeta
from src.zeta.polygamma import polygamma_34_series

logger = logging.getLogger(__name__)


def emit(text: str, output: Optional[str]) -> None:
    """Write rendered output to a file when one is given, otherwise to stdout."""
    if output:
        FileUtils.write_output(output, text)
    else:
        sys.stdout.write(text)


def cmd_seq(args) -> int:
    """
    List (index, value) rows of a sequence.

    Returns:
        Exit code 0; invalid indices raise InvalidParameterError (exit 2)
    """
    start = args.start if args.start is not None else first_index(args.name)
    if start < 0:
        raise InvalidParameterError(f"start must be nonnegative, got {start}")
    rows = [{'index': n, 'value': sequence_value(args.name, n)} for n in range(start, start + args.count)]
    emit(render_rows(rows, ['index', 'value'], args.format), args.output)
    return Constants.EXIT_OK


def _require_s(args) -> str:
    if args.s is None:
        raise InvalidParameterError(f"--s is required for series {args.series}")
    return args.s


def evaluate_series(args, config: AppConfig) -> SeriesValue:
    """
    Evaluate the series named by --series at the current working precision.

    Returns:
        SeriesValue of the evaluation
    """
    bits = args.prec_bits
    caps = {'max_n': config.get_em_max_n(), 'max_j': config.get_em_max_j()}
    series = args.series

    if series == cli_parser.SERIES_POLYGAMMA34:
        if args.k is None:
            raise InvalidParameterError("--k is required for series polygamma34")
        return polygamma_34_series(args.k, precision=bits, **caps)

    s = _require_s(args)
    if series == cli_parser.SERIES_ZETA:
        return riemann_zeta(s, precision=bits, **caps)
    if series == cli_parser.SERIES_HURWITZ:
        return hurwitz_zeta(s, args.a, precision=bits, **caps)
    if series == cli_parser.SERIES_HURWITZ34:
        return hurwitz_zeta(s, Fraction(3, 4), precision=bits, **caps)
    if series == cli_parser.SERIES_DELTA_FE:
        return delta_via_functional_equation(s, precision=bits, **caps)

    options = {'precision': bits, 'chunk_size': config.get_chunk_size(), 'workers': args.workers}
    if series == cli_parser.SERIES_DELTA:
        return dirichlet_series(CoefficientStream(StreamKind.PAPERFOLDING_RAW), s, args.terms, **options)
    return dirichlet_series(CoefficientStream.from_name(series, args.k), s, args.terms, **options)


def cmd_eval(args, config: AppConfig) -> int:
    """
    Evaluate one series and print its enclosure.

    Returns:
        Exit code 0; a shortfall against the accuracy target prints the partial result and
        raises PrecisionShortfallError (exit 3)
    """
    with working_precision(args.prec_bits):
        value = evaluate_series(args, config)
        parameters = {'precision': args.prec_bits}
        if args.s is not None:
            parameters['s'] = args.s
        if args.series == cli_parser.SERIES_HURWITZ:
            parameters['a'] = rational_string(args.a)
        if args.k is not None:
            parameters['k'] = args.k
        if value.method == SeriesMethod.DIRECT_PARTIAL_SUM:
            parameters['N'] = args.terms
        emit(render_series_value(args.series, parameters, value, args.format), args.output)

    if not value.target_met:
        raise PrecisionShortfallError(f"{args.series} did not reach its accuracy target "
                                      f"(achieved bound {value.tail_bound})", partial=value)
    return Constants.EXIT_OK


def cmd_verify(args, config: AppConfig) -> int:
    """
    Run the selected verifiers.

    Returns:
        Exit code 0 when every report has its expected outcome (regular checks pass, negative
        controls fail), 1 otherwise
    """
    selection = resolve_selection(cli_parser.split_identities(args.identity))
    grid = None
    if args.k is not None or args.s is not None or args.terms is not None:
        k_values = list(range(args.k[0], args.k[1] + 1)) if args.k is not None else None
        grid = {identity_id: default_grid(identity_id, k_values=k_values, s_values=args.s, terms=args.terms)
                for identity_id in selection}

    reports = run_suite(selection, grid=grid, precision=args.prec_bits, chunk_size=config.get_chunk_size(),
                        workers=args.workers, max_n=config.get_em_max_n(), max_j=config.get_em_max_j())
    with working_precision(args.prec_bits):
        emit(render_reports(reports, args.format), args.output)

    if all(report.as_expected for report in reports):
        return Constants.EXIT_OK
    return Constants.EXIT_VERIFICATION_FAILED


def _require_positive_range(low: int, what: str) -> None:
    if low < 1:
        raise InvalidParameterError(f"table {what} needs k >= 1, got {low}")


def table_rows(what: str, low: int, high: int) -> List[dict]:
    """
    Rows of an exact coefficient table over k = low..high.

    Args:
        what: One of Constants.TABLE_NAMES
        low: First k
        high: Last k

    Returns:
        Row dictionaries with exact values rendered as "p" or "p/q"
    """
    ks = range(low, high + 1)
    if what == "euler":
        table = euler_numbers(high)
        return [{'k': k, 'index': 2 * k, 'value': str(table[2 * k])} for k in ks]
    if what == "bernoulli":
        table = bernoulli_numbers(2 * high)
        return [{'k': k, 'index': 2 * k, 'value': rational_string(table[2 * k])} for k in ks]

    _require_positive_range(low, what)
    if what == "coefficients":
        return [{'k': k, 'value': str(lemma4_coefficient(k))} for k in ks]
    if what == "pi-coefficients":
        return [{'k': k, 'value': rational_string(pi_coefficient(k))} for k in ks]
    if what == "corollary-denominators":
        return [{'k': k, 'value': str(corollary_denominator(k))} for k in ks]
    if what == "lemma4-listing":
        rows = []
        for position, listed in enumerate(Constants.LEMMA4_LISTED_VALUES, start=1):
            formula = lemma4_coefficient(position)
            rows.append({'k': position, 'listed': str(listed), 'formula': str(formula),
                         'match': "yes" if listed == formula else "no"})
        return [row for row in rows if low <= row['k'] <= high]
    if what == "theorem1-streams":
        rows = []
        for k in ks:
            power = 2 ** (2 * k + 1)
            rows.append({'k': k, 'denominator': str(power), 't_shifted': str(power + 1), 't': str(power - 1),
                         'lemma4': str(lemma4_coefficient(k)), 'pi_coefficient': rational_string(pi_coefficient(k))})
        return rows
    raise InvalidParameterError(f"Unknown table: {what!r}. Valid tables are: {', '.join(Constants.TABLE_NAMES)}")


def cmd_table(args) -> int:
    """Print an exact coefficient table."""
    low, high = args.k
    rows = table_rows(args.what, low, high)
    columns = list(rows[0]) if rows else ['k', 'value']
    emit(render_rows(rows, columns, args.format), args.output)
    return Constants.EXIT_OK


def dispatch(args, config: AppConfig) -> int:
    """Run the subcommand selected on the command line."""
    if args.command == "seq":
        return cmd_seq(args)
    if args.command == "eval":
        return cmd_eval(args, config)
    if args.command == "verify":
        return cmd_verify(args, config)
    if args.command == "table":
        return cmd_table(args)
    raise InvalidParameterError(f"Unknown command: {args.command}")
