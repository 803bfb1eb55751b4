"""Exact combinatorics and sagbi checks for Plücker algebras and their semi-infinite analogues."""

__version__ = "0.1.0"
