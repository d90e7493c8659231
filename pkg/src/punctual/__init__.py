"""Exact computer algebra for monic families over k-algebras and the
coordinate ring of the punctual Hilbert scheme of the line."""

__version__ = "0.1.0"
