"""Exact verification of k-fold translative tilings by centrally symmetric polygons."""

__version__ = "0.1.0"
