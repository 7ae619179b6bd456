"""Exception types raised by capflow.

Every domain error derives from :class:`CapillaryFlowError` and, where it
signals a bad input value, also from :class:`ValueError`, so callers can
catch either the package hierarchy or the builtin one.
"""

from __future__ import annotations


class CapillaryFlowError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveRadiusError(CapillaryFlowError, ValueError):
    """A radius was zero or negative."""


class RadiusOrderError(CapillaryFlowError, ValueError):
    """r_max was smaller than r_min."""


class StraightRadiusMismatchError(CapillaryFlowError, ValueError):
    """A straight profile was given r_min != r_max."""


class NonPositiveLengthError(CapillaryFlowError, ValueError):
    """A tube length was zero or negative."""


class NonPositiveViscosityError(CapillaryFlowError, ValueError):
    """A fluid viscosity was zero or negative."""


class SignMismatchError(CapillaryFlowError, ValueError):
    """Flow rate and pressure drop disagreed in sign."""


class OutOfDomainError(CapillaryFlowError, ValueError):
    """An axial position fell outside [-L/2, L/2]."""


class TooFewSamplesError(CapillaryFlowError, ValueError):
    """A profile table was requested with fewer than two samples."""


class EmptyCompositeError(CapillaryFlowError, ValueError):
    """A series or parallel network node had no elements."""


class NotConvergedError(CapillaryFlowError, RuntimeError):
    """Adaptive integration stopped before reaching the requested tolerance.

    The partial result (best value so far, with ``converged=False``) is
    attached as :attr:`result`.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class NetworkSpecError(CapillaryFlowError, ValueError):
    """A network spec document failed to parse or validate.

    :attr:`location` holds a path into the document (e.g.
    ``elements[2].rmin``) or a line/column reference for syntax errors.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
