"""Exact verification toolkit for quantum matrix algebras and Macdonald zonal spherical functions."""

__version__ = "0.1.0"
