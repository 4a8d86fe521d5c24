"""
File and directory utilities for the command line output.
"""

import os
import logging

logger = logging.getLogger(__name__)


class FileUtils:
    """Utility functions for file operations."""

    @staticmethod
    def ensure_directory_exists(directory_path: str) -> str:
        """
        Ensure the specified directory exists, creating it if necessary.

        Args:
            directory_path: Path to the directory

        Returns:
            Absolute path to the directory
        """
        abs_path = os.path.abspath(directory_path)

        if not os.path.exists(abs_path):
            logger.info(f"Creating directory: {abs_path}")
            os.makedirs(abs_path)
        elif not os.path.isdir(abs_path):
            logger.error(f"{abs_path} exists but is not a directory")
            raise ValueError(f"{abs_path} exists but is not a directory")

        return abs_path

    @staticmethod
    def write_output(output_path: str, text: str) -> str:
        """
        Write rendered output to a file, creating parent directories as needed.

        Args:
            output_path: Destination file
            text: Rendered output

        Returns:
            Absolute path of the written file
        """
        abs_path = os.path.abspath(output_path)
        FileUtils.ensure_directory_exists(os.path.dirname(abs_path))
        with open(abs_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info(f"Wrote {len(text)} characters to {abs_path}")
        return abs_path
