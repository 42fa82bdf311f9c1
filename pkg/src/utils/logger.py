"""Logging configuration using loguru."""

import sys
from pathlib import Path
from loguru import logger

_logger_configured = False

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<magenta>{extra[command]}</magenta> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[command]} | {name}:{function}:{line} - {message}"


def package_filter(record) -> bool:
    """Keep records emitted by the toolkit itself, not by imported libraries."""
    name = record["name"] or ""
    return name == "__main__" or name == "src" or name.startswith("src.")


def setup_logger(log_level: str = "INFO", log_file: bool = False, force: bool = False) -> logger:
    """
    Setup and configure the logger.

    Records carry the running subcommand in ``extra["command"]``; ``run`` binds
    it with ``logger.contextualize`` and it reads ``-`` outside a command.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Whether to also log to logs/nlie_<date>.log
        force: Reconfigure even if a previous call already set handlers

    Returns:
        Configured logger instance
    """
    global _logger_configured

    if _logger_configured and not force:
        return logger

    logger.remove()
    logger.configure(extra={"command": "-"})

    # stdout carries command reports only
    logger.add(
        sys.stderr,
        format=CONSOLE_FORMAT,
        filter=package_filter,
        level=log_level.upper(),
        colorize=True
    )

    if log_file:
        log_dir = Path(__file__).parent.parent.parent / "logs"
        log_dir.mkdir(exist_ok=True)

        logger.add(
            log_dir / "nlie_{time:YYYY-MM-DD}.log",
            format=FILE_FORMAT,
            filter=package_filter,
            level="DEBUG",
            rotation="1 day",
            retention="30 days",
            compression="zip"
        )

    _logger_configured = True
    return logger


def get_logger():
    """Get the configured logger instance."""
    if not _logger_configured:
        setup_logger(log_level="WARNING")
    return logger
