"""Toolkit for embedding trees in graphs rich in high-degree vertices,
with exhaustive desk-scale verifiers for the underlying combinatorics."""

__version__ = "0.1.0"
