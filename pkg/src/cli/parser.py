"""
Argument parsing for the zeta_verify command line.
"""

import argparse
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from src.config.app_config import AppConfig
from src.config.constants import Constants
from src.kernel.precision import precision_for_digits
from src.sequences.streams import StreamKind

logger = logging.getLogger(__name__)

SERIES_ZETA = "zeta"
SERIES_HURWITZ = "hurwitz"
SERIES_HURWITZ34 = "hurwitz34"
SERIES_DELTA = "delta"
SERIES_DELTA_FE = "delta-fe"
SERIES_POLYGAMMA34 = "polygamma34"

SERIES_NAMES = [SERIES_ZETA, SERIES_HURWITZ, SERIES_HURWITZ34, SERIES_DELTA, SERIES_DELTA_FE,
                SERIES_POLYGAMMA34] + [kind.value for kind in StreamKind]


def parse_k_range(text: str) -> Tuple[int, int]:
    """Parse "A..B" (or a single "A") into an inclusive integer range."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B with integers A <= B, got {text!r}")
    if low < 0 or high < low:
        raise argparse.ArgumentTypeError(f"expected 0 <= A <= B, got {text!r}")
    return low, high


def parse_precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if bits < Constants.MIN_PRECISION_BITS:
        raise argparse.ArgumentTypeError(f"precision must be at least {Constants.MIN_PRECISION_BITS} bits")
    return bits


def parse_digits(text: str) -> int:
    """Decimal digits to working bits (4 bits per digit plus guard bits)."""
    return precision_for_digits(parse_positive(text))


def parse_positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def parse_real(text: str) -> str:
    """Validate a decimal or p/q exponent; kept as text so it stays exact."""
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a decimal or p/q number, got {text!r}")
    return text


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number p/q, got {text!r}")


def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=Constants.OUTPUT_FORMATS, default=Constants.FORMAT_TEXT,
                        help="Output format (default: text)")
    parent.add_argument("--output", metavar="FILE", help="Write the output to FILE instead of stdout")
    return parent


def _numeric_options(config: AppConfig, terms_default: Optional[int]) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    precision = parent.add_mutually_exclusive_group()
    precision.add_argument("--prec-bits", type=parse_precision, default=config.get_precision_bits(),
                           dest="prec_bits", help=f"Working precision in bits (default: {config.get_precision_bits()})")
    precision.add_argument("--digits", type=parse_digits, default=argparse.SUPPRESS, dest="prec_bits",
                           help="Target decimal digits instead of bits: 4 bits per digit plus "
                                f"{Constants.GUARD_BITS} guard bits")
    parent.add_argument("--terms", type=parse_positive, default=terms_default,
                        help="Terms N of direct summation")
    parent.add_argument("--workers", type=parse_positive, default=config.get_workers(),
                        help="Worker processes for direct summation (the result does not depend on it)")
    return parent


def build_parser(config: Optional[AppConfig] = None) -> argparse.ArgumentParser:
    """
    Build the argument parser with defaults taken from the configuration.

    Args:
        config: Application configuration (environment-backed)

    Returns:
        Configured ArgumentParser
    """
    config = config or AppConfig()
    output = _output_options()

    parser = argparse.ArgumentParser(
        prog="zeta_verify",
        description="Dirichlet series over the Thue-Morse and paperfolding sequences, "
                    "with rigorous verification of their zeta identities")
    subparsers = parser.add_subparsers(dest="command", required=True)

    seq = subparsers.add_parser("seq", parents=[output], help="List sequence values")
    seq.add_argument("--name", required=True, choices=Constants.SEQUENCE_NAMES, help="Sequence name")
    seq.add_argument("--start", type=int, default=None,
                     help="First index (default: 0, or 1 for paperfolding and beta)")
    seq.add_argument("--count", type=parse_positive, default=8, help="Number of values (default: 8)")

    evaluate = subparsers.add_parser("eval", parents=[output, _numeric_options(config, config.get_terms())],
                                     help="Evaluate a series")
    evaluate.add_argument("--series", required=True, choices=SERIES_NAMES, help="Series id")
    evaluate.add_argument("--s", type=parse_real, help="Real exponent s > 1")
    evaluate.add_argument("--a", type=parse_rational, default=Fraction(1), help="Hurwitz shift 0 < a <= 1")
    evaluate.add_argument("--k", type=parse_positive, help="Integer parameter of polygamma34 and of "
                                                           "parameterized streams")

    verify = subparsers.add_parser("verify", parents=[output, _numeric_options(config, None)],
                                   help="Verify identities")
    verify.add_argument("--identity", action="append", default=None,
                        help="Identity id, repeatable or comma-separated; 'all' for every identity")
    verify.add_argument("--k", type=parse_k_range, help="k range A..B")
    verify.add_argument("--s", type=parse_real, action="append", help="Exponent s, repeatable")

    table = subparsers.add_parser("table", parents=[output], help="Print exact coefficient tables")
    table.add_argument("--what", required=True, choices=Constants.TABLE_NAMES, help="Table name")
    table.add_argument("--k", type=parse_k_range, default=(1, 4), help="Index range A..B (default: 1..4)")

    return parser


def split_identities(values: Optional[List[str]]) -> List[str]:
    """Flatten repeated and comma-separated --identity values; none given means all."""
    if values is None:
        return ["all"]
    identities = []
    for value in values:
        identities.extend(part.strip() for part in value.split(",") if part.strip())
    return identities
