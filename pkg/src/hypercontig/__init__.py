"""Exact contiguous relations of Gauss 2F1 hypergeometric functions."""

__version__ = "0.1.0"
