"""Exception hierarchy shared by every module.

Precondition violations derive from :class:`DomainError` so the CLI can map
them to a single exit code.
"""


class FrobesselError(Exception):
    """Base class for all library errors."""


class DomainError(FrobesselError, ValueError):
    """An argument lies outside the domain where the routine is defined."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. a non-positive integer parameter)."""


class OutsideDisc(DomainError):
    """Point lies outside the estimated disc of convergence."""


class DegenerateInput(DomainError):
    """Coincident points or other degenerate configuration."""


class LatticePointError(DomainError):
    """Weierstrass evaluation requested at a lattice point."""


class SlowConvergence(DomainError):
    """Series parameter too close to the boundary of convergence."""


class NonConvergence(FrobesselError):
    """Adaptive routine exhausted its budget before meeting the tolerance."""


class NonFinite(FrobesselError):
    """Integrand or intermediate quantity produced inf or nan."""


class TruncationTooShort(FrobesselError):
    """A truncated series is too short for the requested accuracy."""


class MismatchError(FrobesselError):
    """Two independent routes for the same quantity disagree."""


class RecurrenceInconsistent(FrobesselError):
    """A coefficient recurrence cannot satisfy its truncation condition."""
