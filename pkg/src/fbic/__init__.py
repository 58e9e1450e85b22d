"""Rates, bounds and simulations for K-user symmetric interference channels
with rate-limited feedback.

``fbic.det`` covers the linear deterministic model (exact rational rates and
a bit-level simulator of the two-slot schemes), ``fbic.gauss`` the Gaussian
model (lattice-scheme rates, upper bounds, gap constants, GDoF) and
``fbic.sweep`` the grid sweeps and reports used by the ``fbic`` command.
"""
from . import det, gauss, sweep
from .errors import (
    DegenerateChannel,
    DimensionError,
    FbicError,
    InfeasibleParameters,
    InvalidAllocation,
    InvalidParameters,
    NotWellDefined,
    SchemeError,
    UnsupportedRegime,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateChannel",
    "DimensionError",
    "FbicError",
    "InfeasibleParameters",
    "InvalidAllocation",
    "InvalidParameters",
    "NotWellDefined",
    "SchemeError",
    "UnsupportedRegime",
    "det",
    "gauss",
    "sweep",
]
