"""
Application configuration management.
"""

import os
import logging
from typing import Dict, Any

from src.config.constants import Constants
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)


class AppConfig:
    """
    Manages application configuration and settings.
    """

    def __init__(self):
        """
        Initialize the application configuration.
        Loads settings from environment variables.
        """
        self.config = {}
        self._load_from_env()

    @staticmethod
    def _read_int(name: str, default: int, minimum: int) -> int:
        raw = os.environ.get(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise InvalidParameterError(f"{name} must be an integer, got {raw!r}")
        if value < minimum:
            raise InvalidParameterError(f"{name} must be >= {minimum}, got {value}")
        return value

    def _load_from_env(self) -> None:
        """
        Load configuration from environment variables.
        """
        # Numeric settings
        self.config['precision_bits'] = self._read_int(
            'ZETA_PREC_BITS', Constants.DEFAULT_PRECISION_BITS, Constants.MIN_PRECISION_BITS)
        self.config['terms'] = self._read_int('ZETA_TERMS', Constants.DEFAULT_TERMS, 1)
        self.config['chunk_size'] = self._read_int('ZETA_CHUNK_SIZE', Constants.DEFAULT_CHUNK_SIZE, 1)
        self.config['workers'] = self._read_int('ZETA_WORKERS', Constants.DEFAULT_WORKERS, 1)

        # Euler-Maclaurin caps
        self.config['em_max_n'] = self._read_int('ZETA_EM_MAX_N', Constants.EM_MAX_N, Constants.EM_MIN_N)
        self.config['em_max_j'] = self._read_int('ZETA_EM_MAX_J', Constants.EM_MAX_J, 1)

        # Logging settings
        log_level = os.environ.get('LOG_LEVEL', 'INFO').upper()
        self.config['log_level'] = getattr(logging, log_level, logging.INFO)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Configuration key
            default: Default value if key is not found

        Returns:
            Configuration value or default
        """
        return self.config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key
            value: Configuration value
        """
        self.config[key] = value
        logger.debug(f"Set config {key} = {value}")

    def get_precision_bits(self) -> int:
        """
        Get the working precision in bits.

        Returns:
            Precision in bits
        """
        return self.get('precision_bits', Constants.DEFAULT_PRECISION_BITS)

    def get_terms(self) -> int:
        """
        Get the default number of terms for direct summation.

        Returns:
            Number of terms
        """
        return self.get('terms', Constants.DEFAULT_TERMS)

    def get_chunk_size(self) -> int:
        """
        Get the fixed chunk size used by deterministic summation.

        Returns:
            Chunk size
        """
        return self.get('chunk_size', Constants.DEFAULT_CHUNK_SIZE)

    def get_workers(self) -> int:
        """
        Get the number of worker processes for chunked summation.

        Returns:
            Worker count
        """
        return self.get('workers', Constants.DEFAULT_WORKERS)

    def get_em_max_n(self) -> int:
        return self.get('em_max_n', Constants.EM_MAX_N)

    def get_em_max_j(self) -> int:
        return self.get('em_max_j', Constants.EM_MAX_J)

    def get_log_level(self) -> int:
        """
        Get the logging level.

        Returns:
            Logging level
        """
        return self.get('log_level', logging.INFO)

    def as_dict(self) -> Dict[str, Any]:
        """
        Get the entire configuration as a dictionary.

        Returns:
            Dictionary of configuration values
        """
        return dict(self.config)
