"""Exhaustive search for curve covers whose Prym variety carries a forced
rigid factor, driven by exact character theory of the covering group."""

__version__ = "0.1.0"
