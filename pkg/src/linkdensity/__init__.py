"""Exact link-diagram invariants and determinant-density synthesis."""

__version__ = "0.1.0"
