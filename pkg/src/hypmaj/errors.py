"""Exception types shared across the package."""

from __future__ import annotations


class HypmajError(Exception):
    """Base class for all errors raised by hypmaj."""


class InvalidArgument(HypmajError, ValueError):
    """An argument is outside the domain of the operation (zero divisor, bad length, ...)."""


class ContractViolation(HypmajError, ValueError):
    """The caller broke a documented precondition that is cheap to detect."""


class PreconditionViolation(HypmajError, ValueError):
    """A mathematical precondition failed; ``evidence`` says why."""

    def __init__(self, message: str, evidence: dict | None = None):
        super().__init__(message)
        self.evidence = dict(evidence or {})


class InvalidMove(HypmajError, ValueError):
    """A pinch move does not apply to the given vector."""


class WrongBranch(HypmajError, ValueError):
    """An operator was sent to the classifier branch that does not handle it."""
