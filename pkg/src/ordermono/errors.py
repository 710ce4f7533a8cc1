"""Exceptions that carry a stable meaning across the library and the CLI."""

from __future__ import annotations


class DimensionMismatchError(ValueError):
    """Two objects that must share a ground-set size or length do not."""


class NotMultiUtilityError(ValueError):
    """A family of value tables fails the multi-utility biconditional.

    ``pair`` holds the first ordered pair (x, y) at which the scan failed.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class InfeasibleConstraintError(ValueError):
    """A moment constraint selects no point of the probability simplex."""


class VerificationError(RuntimeError):
    """An exact self-check of a constructed witness failed.

    Raised only when a construction that is guaranteed correct by its
    preconditions fails its own verification, so it signals a bug rather
    than bad input.
    """
