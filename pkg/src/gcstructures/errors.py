"""Exception types shared across the package."""


class GCStructuresError(Exception):
    """Base class for errors raised by this package."""


class UnsupportedType(GCStructuresError, ValueError):
    """The requested root system type (or rank) is not available."""


class CapExceeded(GCStructuresError, RuntimeError):
    """An enumeration would exceed the configured budget."""


class NotClosed(GCStructuresError, ValueError):
    """A subset of roots is not closed under root addition."""


class NotSubalgebra(GCStructuresError, ValueError):
    """A subspace is not closed under the bracket."""


class DimensionMismatch(GCStructuresError, ValueError):
    """Operands live in spaces of different dimension."""


class UnsupportedKind(GCStructuresError, ValueError):
    """Unknown conjugation / real-form kind."""


class InvalidPartition(GCStructuresError, ValueError):
    """Not a partition of the requested integer."""


class NotGCSubset(GCStructuresError, ValueError):
    """A subset of roots fails the generalized complex subset conditions."""
