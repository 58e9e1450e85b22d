"""Exception hierarchy shared by the deterministic and Gaussian layers."""


class FbicError(Exception):
    """Base class for all package errors."""


class InvalidParameters(FbicError, ValueError):
    """Channel parameters violate their basic invariants."""


class DegenerateChannel(InvalidParameters):
    """Direct-link gain n = 0, so the interference level m/n is undefined."""


class DimensionError(FbicError, ValueError):
    """A signal vector does not have the expected length."""


class UnsupportedRegime(FbicError):
    """No construction is implemented for this interference level."""


class SchemeError(FbicError, AssertionError):
    """Internal consistency check of a coding scheme failed."""


class InvalidAllocation(FbicError, ValueError):
    """A power-split vector violates its regime's side conditions."""


class InfeasibleParameters(FbicError, ValueError):
    """Default or searched power split has no valid (non-negative) solution."""


class NotWellDefined(FbicError, ValueError):
    """Quantity is not defined at the requested point (GDoF at alpha = 1)."""
