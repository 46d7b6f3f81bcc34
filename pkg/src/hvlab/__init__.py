"""Hilbert functions, liaison and Borel-fixed ideals for deciding when a
positive h-vector forces the arithmetically Cohen-Macaulay property."""

__version__ = "0.1.0"
