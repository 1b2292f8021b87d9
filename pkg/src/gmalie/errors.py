"""Exception hierarchy and the structured violation record used by validators."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed identity, located by its law name and basis indices."""

    law: str
    where: tuple = ()
    detail: str = ""

    def __str__(self):
        pos = "" if not self.where else f" at {self.where}"
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.law}{pos}{tail}"


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(WorkbenchError):
    """Inputs have incompatible shapes, ambient dimensions, or fields."""


class ValidationFailure(WorkbenchError):
    """A constructed object violates its defining identities."""

    def __init__(self, message, violations=()):
        self.violations = tuple(violations)
        if self.violations:
            message = f"{message}: {self.violations[0]}"
        super().__init__(message)


class PreconditionError(WorkbenchError):
    """An operation was called on input outside its stated domain."""


class CharacteristicTwoError(PreconditionError):
    """Lie-derivation analyses require a two-torsion free scalar field."""


class ConsistencyError(WorkbenchError):
    """An internal cross-check failed; indicates a bug, not bad input."""
