"""Exact computations for the prefix order of the alternating group generated by 3-cycles."""

__version__ = "0.1.0"
