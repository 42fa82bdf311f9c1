"""nlie-toolkit: exact n-Lie algebras, coalgebras and bialgebras."""

__version__ = "1.0.0"
