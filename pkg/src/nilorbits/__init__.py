"""Nilpotent orbits of the exceptional simple Lie algebras, with exact
certificates for centralizer indices and double centralizers."""

__version__ = "0.1.0"
