"""Exception types shared across the package."""

from __future__ import annotations


class TreeWienerError(Exception):
    """Base class for all errors raised by treewiener."""


class InvalidArgumentError(TreeWienerError, ValueError):
    pass


class EdgeListFormatError(TreeWienerError, ValueError):
    """The edge-list text could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotATreeError(TreeWienerError, ValueError):
    """A graph violates one of the tree invariants.

    ``invariant`` names the violated property: one of ``"connected"``,
    ``"acyclic"``, ``"edge-count"``, ``"symmetric"``, ``"no-self-loops"``,
    ``"no-duplicate-edges"``, ``"vertex-range"``.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"not a tree ({invariant})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class TooLargeError(TreeWienerError, ValueError):
    """Requested instance exceeds the configured order guard."""


class IntegrityError(TreeWienerError, ArithmeticError):
    """An exactness check failed (non-zero remainder or mismatched case sums)."""
