"""
Exception hierarchy for the workbench.

Library code raises these; only the command-line driver translates them
into exit codes.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""

    exit_code = 2


class DomainError(WorkbenchError, ValueError):
    """Invalid input or a violated precondition."""

    exit_code = 2


class UnsupportedTypeError(DomainError):
    """The requested operation is only implemented for other affine types."""


class SizeGuardError(DomainError):
    """An enumeration exceeded its configured size guard."""


class LetterInvalidError(WorkbenchError):
    """A braid operator T_i was applied to a word containing the letter i."""


class NotComputableError(WorkbenchError):
    """A root vector or PBW factor cannot be reached in the requested frame."""

    exit_code = 3


class InconclusiveError(WorkbenchError):
    """The truncation is too small to decide the question."""

    exit_code = 3


class NonIntegralTransitionError(WorkbenchError):
    """A bar-transition entry is not a Laurent polynomial."""


class ExtremalSearchOverflow(WorkbenchError):
    """The extremality search visited more states than its cap allows."""
