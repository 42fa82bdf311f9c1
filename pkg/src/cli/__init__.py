"""Command-line interface module."""

from .commands import build_parser, run
from .nlie_format import NlieDocument, NlieParseError, emit, parse

__all__ = ["NlieDocument", "NlieParseError", "build_parser", "emit", "parse", "run"]
