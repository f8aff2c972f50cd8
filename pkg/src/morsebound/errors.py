"""Exception types shared across the package."""


class MorseBoundError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MorseBoundError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CriticalCouplingError(DomainError):
    """Inverse-square coupling at or below the fall-to-the-centre threshold."""


class UnsupportedDeltaError(DomainError):
    """Power-law exponent whose radial problem has no bound-state Morse image."""


class FamilyMismatchError(DomainError):
    """A radial state was handed to an operation of the other potential family."""


class BracketError(MorseBoundError, RuntimeError):
    """An energy bracket does not isolate the requested eigenvalue."""


class ConvergenceError(MorseBoundError, RuntimeError):
    """An iterative scheme failed to reach its tolerance within budget."""
