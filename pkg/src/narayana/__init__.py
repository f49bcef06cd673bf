"""Exact Narayana-polynomial toolkit: recurrences, Catalan-Stieltjes triangles,
weighted lattice-path oracles, truncated power series and an identity checker."""

__version__ = "0.1.0"
