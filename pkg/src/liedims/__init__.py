"""Graded dimensions of free, metabelian and surface-group Lie algebras, and the
counting bounds built on them."""

__version__ = "0.1.0"
