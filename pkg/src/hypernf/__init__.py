"""Exact hypernormal forms for non-resonant double Hopf vector fields."""

__version__ = "0.1.0"
