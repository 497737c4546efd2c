# -*- coding: utf-8 -*-
"""
noblemeans.errors
-----------------

Exceptions raised by the noblemeans package.

Every exception derives from ``NobleMeansError`` and from the builtin that
describes it best, so ``except ValueError`` keeps working for argument errors.
"""

__all__ = [
    'NobleMeansError',
    'FamilyMismatchError',
    'SizeLimitError',
    'NotConvergedError',
    'NonPrimitiveError',
    'ConfigError'
]


class NobleMeansError(Exception):
    """Base class of all noblemeans errors."""


class FamilyMismatchError(NobleMeansError, ValueError):
    """Two objects of different noble means families were combined."""


class SizeLimitError(NobleMeansError, ValueError):
    """An enumeration would exceed the configured size limit.

    Parameters
    ----------
    lower_bound
        A proven lower bound of the size that would have been produced.

    limit
        The limit in force.
    """

    def __init__(self, msg: str, lower_bound: int, limit: int):
        super().__init__(msg)

        self.lower_bound = lower_bound
        self.limit = limit


class NotConvergedError(NobleMeansError, RuntimeError):
    """An iterative computation did not reach its fixed point."""

    def __init__(self, msg: str, iterations: int):
        super().__init__(msg)

        self.iterations = iterations


class NonPrimitiveError(NobleMeansError, ArithmeticError):
    """An induced substitution matrix is not primitive."""

    def __init__(self, msg: str, matrix, alphabet):
        super().__init__(msg)

        self.matrix = matrix
        self.alphabet = alphabet


class ConfigError(NobleMeansError, ValueError):
    """A run configuration is invalid."""
