"""Matroid complexes of dimension at most 1: construction, classification and h-vectors."""

__version__ = "0.1.0"
