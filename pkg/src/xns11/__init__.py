"""Exact verification of the equations, differentials and automorphisms of X_ns(11)."""

__version__ = "0.1.0"
