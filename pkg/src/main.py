#!/usr/bin/env python3
"""
nlie-toolkit - Main Entry Point

Runs one ``nlie`` subcommand: the report goes to stdout, diagnostics to stderr.
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.utils.logger import setup_logger


def main(argv=None) -> int:
    """Main entry point; returns the process exit code."""
    from src.cli.commands import EXIT_USAGE, run

    logger = setup_logger(log_level="WARNING")
    try:
        code, text = run(sys.argv[1:] if argv is None else argv)
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 130
    except Exception as e:
        logger.exception(f"Fatal error: {e}")
        return EXIT_USAGE
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
