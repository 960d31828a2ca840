"""Coulomb wave functions and numerical checks of their Lorentz-group integral identities."""

__version__ = "0.1.0"
