"""Affine sl2 Jack polynomials as exact q-series, with modular S/T data."""

__version__ = "0.1.0"
