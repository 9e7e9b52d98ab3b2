"""Exact computations with Chevalley groups and split spherical buildings."""

__version__ = "0.1.0"
