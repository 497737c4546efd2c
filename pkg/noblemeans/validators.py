# -*- coding: utf-8 -*-
"""
noblemeans.validators
---------------------

This module validates the arguments shared by the public functions of the
noblemeans package and raises ``ValueError`` (or a subclass from
``noblemeans.errors``) with a message that explains the accepted range.

Use the function ``help()`` for more information:

>>> from noblemeans import validators
>>> help(validators)
Help on module noblemeans.validators in noblemeans:

NAME
    noblemeans.validators

DESCRIPTION
(...)

Note
----
Every guard is named ``raise_for_invalid_<thing>`` and returns ``None`` when
the value is valid, so it can be called as a statement at the top of a
function.
"""

__all__ = [
    'raise_for_invalid_m',
    'raise_for_invalid_branch',
    'raise_for_invalid_probs',
    'raise_for_invalid_letters',
    'raise_for_invalid_length',
    'raise_for_invalid_positive',
    'raise_for_size_limit',
    'is_valid_word'
]

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__

import numpy as np

from noblemeans.consts import ALPHABET, LETTER_B
from noblemeans.errors import SizeLimitError


def raise_for_invalid_m(m) -> None:
    """Raise an exception if ``m`` is not a positive integer.

    Parameters
    ----------
    m
        The parameter of the noble means family.
    """

    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        msg_error = f'The family parameter m "{m}" is invalid. Enter a valid m.'
        msg_error += ' The range is m >= 1 (integer).'

        raise ValueError(msg_error)


def raise_for_invalid_branch(i, m) -> None:
    """Raise an exception if ``i`` is not a branch index of the family ``m``."""

    raise_for_invalid_m(m)

    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not (0 <= i <= m):
        msg_error = f'The branch index i "{i}" is invalid for m = {m}. Enter a valid branch.'
        msg_error += f' The range is 0 to {m}.'

        raise ValueError(msg_error)


def raise_for_invalid_probs(probs, m, strict: bool = True, atol: float = 1e-12) -> None:
    """Raise an exception if ``probs`` is not a probability vector of length m + 1.

    Parameters
    ----------
    probs
        The probability vector (p_0, ..., p_m).

    m
        The parameter of the noble means family.

    strict
        If ``True``, every entry must be strictly positive (the standing
        assumption of the random substitution). If ``False``, zero entries are
        accepted, which is used for degenerate cross-checks.

    atol
        Accepted deviation of the sum from 1.
    """

    raise_for_invalid_m(m)

    try:
        values = np.asarray(probs, dtype=float)
    except (TypeError, ValueError):
        raise ValueError(f'The probability vector "{probs}" is invalid. Enter real numbers.')

    if values.ndim != 1 or values.size != m + 1:
        msg_error = f'The probability vector "{probs}" is invalid for m = {m}.'
        msg_error += f' It must have exactly {m + 1} entries.'

        raise ValueError(msg_error)

    if not np.all(np.isfinite(values)):
        raise ValueError(f'The probability vector "{probs}" is invalid. Entries must be finite.')

    if strict and np.any(values <= 0):
        msg_error = f'The probability vector "{probs}" is invalid. Enter strictly positive entries.'

        raise ValueError(msg_error)

    if np.any(values < 0):
        raise ValueError(f'The probability vector "{probs}" is invalid. Entries must be non-negative.')

    if abs(values.sum() - 1.0) > atol:
        msg_error = f'The probability vector "{probs}" is invalid. The entries must sum to 1'
        msg_error += f' (tolerance {atol}).'

        raise ValueError(msg_error)


def is_valid_word(text: str) -> bool:
    """Check if ``text`` is a word over the alphabet {a, b}."""

    return isinstance(text, str) and all(letter in ALPHABET for letter in text)


def raise_for_invalid_letters(letters) -> None:
    """Raise an exception if an array of letter codes holds a code other than 0 or 1."""

    if letters.size and int(letters.max()) > LETTER_B:
        msg_error = 'The word is invalid. Only the letters "a" and "b" are accepted.'

        raise ValueError(msg_error)


def raise_for_invalid_length(ell, name: str = 'ell', minimum: int = 1, maximum: int = None) -> None:
    """Raise an exception if a length-like integer is out of range."""

    if isinstance(ell, bool) or not isinstance(ell, (int, np.integer)) or ell < minimum:
        msg_error = f'The value of {name} "{ell}" is invalid. Enter an integer >= {minimum}.'

        raise ValueError(msg_error)

    if maximum is not None and ell > maximum:
        msg_error = f'The value of {name} "{ell}" is invalid. The range is {minimum} to {maximum}.'

        raise ValueError(msg_error)


def raise_for_invalid_positive(value, name: str) -> None:
    """Raise an exception if ``value`` is not a finite real number > 0."""

    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)) \
            or not np.isfinite(value) or value <= 0:
        msg_error = f'The value of {name} "{value}" is invalid. Enter a positive number.'

        raise ValueError(msg_error)


def raise_for_size_limit(lower_bound: int, limit: int, what: str) -> None:
    """Raise ``SizeLimitError`` if ``lower_bound`` exceeds ``limit``.

    Parameters
    ----------
    lower_bound
        A proven lower bound of the number of objects an enumeration produces.

    limit
        The largest accepted number of objects.

    what
        A short description used in the error message.
    """

    if lower_bound > limit:
        msg_error = f'The enumeration of {what} needs at least {lower_bound} entries,'
        msg_error += f' above the limit of {limit}.'

        raise SizeLimitError(msg_error, lower_bound=lower_bound, limit=limit)
