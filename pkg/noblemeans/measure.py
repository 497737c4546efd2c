# -*- coding: utf-8 -*-
"""
noblemeans.measure
------------------

Frequency measure of the random noble means hull.

The random substitution zeta_m lifts to the alphabet D_{m,l} of legal words of
length l (the induced substitution): a legal word ``v`` is replaced by the
l-windows that start inside the image of its first letter. Averaging the
number of occurrences over all local branch choices gives the expected induced
matrix M_{m,l}. It is primitive with Perron-Frobenius eigenvalue lambda_m, and
its right eigenvector, normalised to sum 1, is the measure of the cylinder
sets of length l.

Matrix convention: column ``v``, row ``u``, alphabet in lexicographic order
(a < b). For l = 1 this is M_m = [[m, 1], [1, 0]].
"""

__all__ = [
    'InducedSystem',
    'induced_windows',
    'build_induced',
    'is_primitive',
    'perron_frobenius',
    'cylinder_measure',
    'cylinder_indicator',
    'birkhoff_average',
    'birkhoff_check',
    'empirical_frequencies'
]

import logging
import math

from typing import Callable, Dict, NamedTuple, Tuple

import numpy as np

from numpy.lib.stride_tricks import sliding_window_view

from noblemeans.consts import (
    BIRKHOFF_SIGMAS,
    DEFAULT_CLOSURE_DEPTH,
    LETTER_B,
    PF_MAX_ITERATIONS,
    PF_TOLERANCE
)
from noblemeans.errors import NonPrimitiveError, NotConvergedError
from noblemeans.filters import data_format
from noblemeans.subst import (
    RandomSubst,
    Word,
    hull_sample,
    supported_legal_words,
    window_images
)
from noblemeans.validators import is_valid_word, raise_for_invalid_length


LOGGER = logging.getLogger(__name__)


class InducedSystem(NamedTuple):
    """The induced random substitution on legal words of length ``ell`` with its PF data."""

    m: int
    ell: int
    probs: Tuple[float, ...]
    alphabet: Tuple[str, ...]
    matrix: np.ndarray
    pf_value: float
    pf_right: np.ndarray

    def index(self, word: str) -> int:
        return self.alphabet.index(word)

    def measure(self) -> Dict[str, float]:
        """The cylinder measure as a ``{word: mu}`` lookup."""

        return dict(zip(self.alphabet, self.pf_right.tolist()))

    def to_record(self) -> dict:
        return {
            'm': self.m,
            'ell': self.ell,
            'probs': list(self.probs),
            'alphabet': list(self.alphabet),
            'matrix': self.matrix.tolist(),
            'pf_value': self.pf_value,
            'pf_right': self.pf_right.tolist()
        }


def _choice_weight(choice, probs) -> float:
    return math.prod(float(probs[i]) for i in choice)


def induced_windows(rs: RandomSubst, word: str) -> Dict[Tuple[str, ...], float]:
    """The law of the induced substitution applied to the legal word ``word``.

    Returns a mapping from the tuple of image windows to its probability.
    """

    law = {}
    for choice, windows in window_images(word, rs.m, rs.support):
        key = tuple(windows)
        law[key] = law.get(key, 0.0) + _choice_weight(choice, rs.probs)

    return law


def is_primitive(matrix: np.ndarray) -> bool:
    """Check primitivity with boolean powers up to the Wielandt bound (n - 1)^2 + 1."""

    n = matrix.shape[0]
    bound = (n - 1) ** 2 + 1

    power = (matrix > 0).astype(np.int64)
    exponent = 1

    # A primitive matrix has A^k > 0 for every k >= bound.
    while exponent < bound:
        power = ((power @ power) > 0).astype(np.int64)
        exponent *= 2

    return bool(np.all(power > 0))


def perron_frobenius(matrix: np.ndarray, tol: float = PF_TOLERANCE,
                     max_iterations: int = PF_MAX_ITERATIONS) -> Tuple[float, np.ndarray, int]:
    """Power iteration for a primitive non-negative matrix.

    Returns the PF eigenvalue, the right eigenvector normalised to sum 1 and
    the number of iterations used.

    Raises
    ------
    NotConvergedError
        If successive vectors still differ by more than ``tol`` after
        ``max_iterations`` steps.
    """

    n = matrix.shape[0]
    vector = np.full(n, 1.0 / n)

    for iteration in range(1, max_iterations + 1):
        image = matrix @ vector
        value = float(image.sum())
        image /= value

        if np.max(np.abs(image - vector)) < tol:
            return value, image, iteration

        vector = image

    msg_error = f'The power iteration did not converge within {max_iterations} steps'
    msg_error += f' (tolerance {tol}).'

    raise NotConvergedError(msg_error, iterations=max_iterations)


def build_induced(rs: RandomSubst, ell: int, depth: int = DEFAULT_CLOSURE_DEPTH) -> InducedSystem:
    """Build the expected induced matrix M_{m,l} and its Perron-Frobenius data.

    The expectation runs over every assignment of branches to the letters a
    that influence the windows, weighted by ``rs.probs``.

    Raises
    ------
    NonPrimitiveError
        If the matrix is not primitive. The error carries the matrix.
    """

    raise_for_invalid_length(ell, name='ell')

    alphabet = supported_legal_words(rs, ell, depth).sorted()
    position = {word: j for j, word in enumerate(alphabet)}

    matrix = np.zeros((len(alphabet), len(alphabet)))
    for column, v in enumerate(alphabet):
        for windows, weight in induced_windows(rs, v).items():
            for u in windows:
                matrix[position[u], column] += weight

    if not is_primitive(matrix):
        msg_error = f'The induced matrix for m = {rs.m}, ell = {ell} is not primitive.'

        raise NonPrimitiveError(msg_error, matrix=matrix, alphabet=alphabet)

    pf_value, pf_right, iterations = perron_frobenius(matrix)

    LOGGER.info('Induced system m=%d, ell=%d: %d words, PF value %.12f after %d iterations.',
                rs.m, ell, len(alphabet), pf_value, iterations)

    return InducedSystem(rs.m, ell, tuple(rs.probs.tolist()), alphabet, matrix, pf_value, pf_right)


def cylinder_measure(system: InducedSystem, w, data_only: bool = True):
    """The measure mu_m(Z_k(w)) of the cylinder of the legal word ``w``.

    Parameters
    ----------
    system
        The induced system of length ``len(w)``.

    w
        A word (``str`` or ``Word``) of length ``system.ell``.

    data_only
        If ``True`` a legal word returns only its measure. An illegal word
        always returns ``{'msg': 'illegal', 'data': 0.0}``, which is kept
        apart from a numeric zero.
    """

    w = str(w)

    if not is_valid_word(w) or len(w) != system.ell:
        msg_error = f'The word "{w}" is invalid. Enter a word over {{a, b}} of length {system.ell}.'

        raise ValueError(msg_error)

    if w not in system.alphabet:
        return data_format(data_only, {'msg': 'illegal', 'data': 0.0})

    value = float(system.pf_right[system.index(w)])

    return data_format(data_only, {'msg': 'success', 'data': value})


def cylinder_indicator(w) -> Callable[[np.ndarray], np.ndarray]:
    """The observable 1_{Z_0(w)}, evaluated on all windows of a letter array at once."""

    target = Word.from_string(str(w)).letters

    def indicator(windows: np.ndarray) -> np.ndarray:
        return np.all(windows == target, axis=-1).astype(float)

    indicator.width = target.size

    return indicator


def birkhoff_average(x: Word, observable: Callable, N: int, s: int = 0) -> float:
    """(1/N) sum_{j<N} f(S^(s+j) x) for an observable of finite width.

    Parameters
    ----------
    x
        A two-sided approximant; shifts are counted from its origin.

    observable
        A function of the ``width`` letters starting at the current position,
        evaluated on a 2-D array of windows. Its ``width`` attribute defaults to 1.

    N
        The number of shifts averaged.

    s
        The first shift (may be negative).
    """

    raise_for_invalid_length(N, name='N')

    width = getattr(observable, 'width', 1)
    start = x.origin + s

    if start < 0 or start + N + width - 1 > len(x):
        msg_error = f'The word is too short for N = {N} shifts from offset {s} (width {width}).'

        raise ValueError(msg_error)

    windows = sliding_window_view(x.letters[start:start + N + width - 1], width)

    return float(np.mean(observable(windows)))


def birkhoff_check(rs: RandomSubst, w, N: int, trials: int, s: int = 0,
                   system: InducedSystem = None, sigmas: float = BIRKHOFF_SIGMAS) -> dict:
    """Monte-Carlo check of the ergodic theorem for the cylinder of ``w``.

    Draws ``trials`` independent hull approximants from the seed ``a|a``,
    averages the indicator of ``w`` over ``N`` shifts starting at offset ``s``
    and compares the mean with the cylinder measure.

    Returns a report ``{word, legal, N, trials, offset, mean, standard_error,
    expected, deviation, z, passed}``; the check passes if ``w`` is legal and
    the deviation is below ``sigmas`` standard errors. An illegal word is
    reported with ``legal`` set to ``False`` and never passes.
    """

    raise_for_invalid_length(trials, name='trials', minimum=2)

    w = str(w)

    if system is None:
        system = build_induced(rs, len(w))

    envelope = cylinder_measure(system, w, data_only=False)
    legal = envelope['msg'] == 'success'
    expected = envelope['data']

    if not legal:
        LOGGER.warning('The word "%s" is not legal for m = %d; its cylinder is empty.', w, rs.m)

    indicator = cylinder_indicator(w)
    radius = N + abs(s) + len(w)

    averages = np.array([
        birkhoff_average(hull_sample(child, radius), indicator, N, s)
        for child in rs.spawn(trials)
    ])

    mean = float(averages.mean())
    standard_error = float(averages.std(ddof=1) / math.sqrt(trials))
    deviation = mean - expected

    if standard_error > 0:
        z = deviation / standard_error
        passed = abs(deviation) < sigmas * standard_error
    else:
        z = 0.0 if deviation == 0 else math.inf
        passed = deviation == 0

    passed = legal and passed

    report = {
        'word': w,
        'legal': legal,
        'N': N,
        'trials': trials,
        'offset': s,
        'mean': mean,
        'standard_error': standard_error,
        'expected': expected,
        'deviation': deviation,
        'z': z,
        'passed': passed
    }

    LOGGER.info('Birkhoff check of "%s": mean %.6f, expected %.6f, z = %.2f.', w, mean, expected, z)

    return report


def empirical_frequencies(rs: RandomSubst, ell: int, N: int, trials: int) -> Dict[str, Tuple[float, float]]:
    """Monte-Carlo frequencies of every length-``ell`` word over ``N`` shifts.

    Returns ``{word: (mean, standard_error)}`` over ``trials`` independent
    hull approximants.
    """

    raise_for_invalid_length(ell, name='ell')
    raise_for_invalid_length(trials, name='trials', minimum=2)

    weights = 2 ** np.arange(ell - 1, -1, -1)
    counts = []

    for child in rs.spawn(trials):
        x = hull_sample(child, N + ell)
        windows = sliding_window_view(x.letters[x.origin:x.origin + N + ell - 1], ell)
        codes = windows.astype(np.int64) @ weights
        counts.append(np.bincount(codes, minlength=2 ** ell) / N)

    counts = np.array(counts)
    mean = counts.mean(axis=0)
    standard_error = counts.std(axis=0, ddof=1) / math.sqrt(trials)

    result = {}
    for code in np.flatnonzero(mean > 0):
        word = ''.join('b' if ((code >> (ell - 1 - j)) & 1) == LETTER_B else 'a' for j in range(ell))
        result[word] = (float(mean[code]), float(standard_error[code]))

    return result
