"""Commutator subgroups of welded and flat braid groups."""

__version__ = "1.0.0"
