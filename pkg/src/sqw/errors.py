"""Validation errors raised across the package.

Every error carries the measured magnitude of the violation in
``violation`` so callers (and tests) can report how far off the input was.
"""

from __future__ import annotations


class InvalidState(ValueError):
    """Base class for state/coefficient validation failures."""

    def __init__(self, message: str, violation: float = 0.0):
        super().__init__(message)
        self.violation = violation


class NotHermitian(InvalidState):
    """Matrix differs from its conjugate transpose beyond tolerance."""


class NotPSD(InvalidState):
    """Matrix has an eigenvalue below the negativity tolerance."""


class TraceNotOne(InvalidState):
    """Matrix trace differs from 1 beyond tolerance."""


class NormalizationViolated(InvalidState):
    """Coefficient sum differs from the required normalization."""


class OutsideValidityWindow(InvalidState):
    """Coefficients fall outside the positivity window of the family."""


class PreconditionViolated(InvalidState):
    """An operation-specific input constraint does not hold."""
