"""Exact verification toolkit for conic-bundle discriminants, Gaussian
maps of plane quintics, and their Del Pezzo lifts.

Everything is computed over Q or a prime field with exact arithmetic;
no floating point is used anywhere.
"""

__version__ = "0.1.0"
