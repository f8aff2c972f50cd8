"""Bound-state engine for the generalized Morse potential and the
D-dimensional singular harmonic oscillator and singular Coulomb potentials.

The closed-form spectra and eigenfunctions live in :mod:`morsebound.morse`
and :mod:`morsebound.potentials`; the Langer map connecting the radial
problems to the Morse well is in :mod:`morsebound.langer`; the independent
Numerov shooting oracle is in :mod:`morsebound.oracle`; special functions and
quadrature in :mod:`morsebound.specfun`; the command line in
:mod:`morsebound.cli`.
"""

from . import cli, langer, morse, oracle, potentials, specfun
from .errors import (
    BracketError,
    ConvergenceError,
    CriticalCouplingError,
    DomainError,
    FamilyMismatchError,
    MorseBoundError,
    UnsupportedDeltaError,
)
from .langer import AngularFactor, MorseImage, RadialProblem
from .morse import MorseParams, MorseState
from .oracle import Grid1D, OracleResult
from .potentials import DegeneracyRecord, RadialState

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "cli", "langer", "morse", "oracle", "potentials", "specfun",
    "MorseBoundError", "DomainError", "CriticalCouplingError",
    "UnsupportedDeltaError", "FamilyMismatchError", "BracketError",
    "ConvergenceError",
    "MorseParams", "MorseState",
    "RadialProblem", "AngularFactor", "MorseImage",
    "RadialState", "DegeneracyRecord",
    "Grid1D", "OracleResult",
]
