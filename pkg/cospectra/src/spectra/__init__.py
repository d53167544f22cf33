"""Exact spectral analysis of cographs."""

__version__ = "0.3.0"
