"""Exact computations on monomial points of Grassmannians and Hilbert schemes.

Worst unstable monomial subspaces, Hilbert polynomial data, state vectors,
monomial ideal checks and Donaldson-Futaki expansions, all in exact arithmetic.
"""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
