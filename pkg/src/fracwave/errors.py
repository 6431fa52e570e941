"""Exception hierarchy.

Domain problems (bad arguments) derive from :class:`DomainError`, numerical
non-convergence derives from :class:`ConvergenceError`. The command-line
front end maps these two families onto distinct exit codes.
"""

from __future__ import annotations


class FracwaveError(Exception):
    """Base class for all errors raised by :mod:`fracwave`."""


class DomainError(FracwaveError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class DegenerateOrder(DomainError):
    """Pointwise evaluation requested at ``nu = 1``, where the Mainardi
    function collapses to the distribution :math:`\\delta(r - 1)`."""


class PoleError(DomainError):
    """The gamma function was evaluated at a non-positive integer."""


class ConvergenceError(FracwaveError, ArithmeticError):
    """A numerical procedure failed to reach its requested tolerance."""


class PolicyExhausted(ConvergenceError):
    """A series did not meet its tolerance within the allowed number of terms."""


class QuadratureFailure(ConvergenceError):
    """An adaptive quadrature ran out of subdivisions before converging."""

    def __init__(self, message: str, value: float = float("nan"), err: float = float("inf")) -> None:
        super().__init__(message)
        self.value = value
        self.err = err


class TruncationFailure(QuadratureFailure):
    """No admissible truncation point was found for a semi-infinite integral."""


class SolverFailure(ConvergenceError):
    """A root finder or optimizer failed to converge."""
