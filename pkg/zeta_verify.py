#!/usr/bin/env python3
"""
Command line entry point: sequence listings, series evaluation, identity verification and
exact coefficient tables.
"""

import logging
import sys

from dotenv import load_dotenv

from src.cli.commands import dispatch
from src.cli.parser import build_parser
from src.config.app_config import AppConfig
from src.config.constants import Constants
from src.utils.error_handler import ErrorHandler, ZetaVerifyError

logger = logging.getLogger("zeta_verify")


def configure_logging(level: int) -> None:
    # Diagnostics go to stderr so stdout stays machine readable
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')


def main(argv=None) -> int:
    """Run zeta_verify and return the process exit code."""
    load_dotenv()

    try:
        config = AppConfig()
    except ZetaVerifyError as e:
        configure_logging(logging.INFO)
        print(f"zeta_verify: error: {e}", file=sys.stderr)
        return Constants.EXIT_USAGE
    configure_logging(config.get_log_level())

    args = build_parser(config).parse_args(argv)
    logger.debug(f"Configuration: {config.as_dict()}")

    try:
        return dispatch(args, config)
    except ZetaVerifyError as e:
        code = ErrorHandler().handle(e)
        if code != Constants.EXIT_SHORTFALL:
            print(f"zeta_verify: error: {e}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
