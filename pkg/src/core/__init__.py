"""Core modules: configuration, exact tensors and linear algebra, validation reports."""

from .config import ConfigManager
from .report import PreconditionError, ValidationReport, Violation
from .tensor import TensorElement, canonicalize, kron_det, omega_s, pair, wedge

__all__ = [
    "ConfigManager",
    "PreconditionError",
    "ValidationReport",
    "Violation",
    "TensorElement",
    "canonicalize",
    "kron_det",
    "omega_s",
    "pair",
    "wedge",
]
