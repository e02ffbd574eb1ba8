"""Exact little-cubes and little-intervals computations.

Everything is rational: configurations, paths and their validity checks,
the enveloping and Moore monoids, braid words and planar-tree coherence.
"""

__version__ = "0.1.0"
