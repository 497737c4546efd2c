# -*- coding: utf-8 -*-
"""
noblemeans.subst
----------------

The deterministic noble means substitutions

    zeta_{m,i}:  a -> a^i b a^(m-i),  b -> a      (0 <= i <= m)

their random local mixture zeta_m, which replaces every letter ``a``
independently by the image of branch ``i`` with probability ``p_i``, and the
sets of legal words of the resulting hull.

Letters are stored as ``numpy.uint8`` codes (a = 0, b = 1), so a substitution
step is a handful of vectorised array operations and words with millions of
letters stay cheap.

Example
-------
>>> from noblemeans.subst import NmsRule, RandomSubst, Word, apply_nms, iterate_random
>>> str(apply_nms(NmsRule(m=2, i=1), Word.from_string('ab')))
'abaa'
>>> rs = RandomSubst(m=1, probs=(0.5, 0.5), seed=7)
>>> len(iterate_random(rs, Word.from_string('b'), k=20))
10946
"""

__all__ = [
    'Word',
    'NmsRule',
    'RandomSubst',
    'LegalWordSet',
    'substitution_matrix',
    'letter_counts',
    'apply_nms',
    'apply_random',
    'iterate_random',
    'deterministic_iterate',
    'realisations',
    'legal_words',
    'supported_legal_words',
    'window_images',
    'scan_legal_words',
    'complexity',
    'hull_seed',
    'hull_sample'
]

import logging

from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterable, NamedTuple, Tuple

import numpy as np

from noblemeans.consts import (
    ASCII_OFFSET,
    DEFAULT_CLOSURE_DEPTH,
    HULL_SEED,
    LETTER_A,
    LETTER_B,
    MAX_COMPLEXITY_ELL,
    MAX_REALISATIONS
)
from noblemeans.errors import NotConvergedError
from noblemeans.validators import (
    is_valid_word,
    raise_for_invalid_branch,
    raise_for_invalid_length,
    raise_for_invalid_letters,
    raise_for_invalid_m,
    raise_for_invalid_probs,
    raise_for_size_limit
)


LOGGER = logging.getLogger(__name__)


class Word(object):
    """A finite word over {a, b} with an origin marker.

    Parameters
    ----------
    letters
        The letter codes (0 for a, 1 for b).

    origin
        Index of the letter right of the seed boundary. One-sided words have
        origin 0; the two-sided seed ``a|a`` has origin 1.
    """

    __slots__ = ('letters', 'origin')

    def __init__(self, letters, origin: int = 0):
        letters = np.ascontiguousarray(letters, dtype=np.uint8)

        if letters.ndim != 1:
            raise ValueError('The letters of a word must be a one-dimensional sequence.')

        raise_for_invalid_letters(letters)

        if not (0 <= origin <= letters.size):
            msg_error = f'The origin "{origin}" is invalid. The range is 0 to {letters.size}.'

            raise ValueError(msg_error)

        self.letters = letters
        self.origin = int(origin)

    @classmethod
    def from_string(cls, text: str) -> 'Word':
        """Parse ``'abba'`` (one-sided) or ``'ab|ba'`` (two-sided, origin at the bar)."""

        origin = 0

        if '|' in text:
            left, _, right = text.partition('|')

            if '|' in right:
                raise ValueError(f'The word "{text}" is invalid. Use at most one "|".')

            origin = len(left)
            text = left + right

        if not is_valid_word(text):
            msg_error = f'The word "{text}" is invalid. Only the letters "a" and "b" are accepted.'

            raise ValueError(msg_error)

        letters = np.frombuffer(text.encode('ascii'), dtype=np.uint8) - ASCII_OFFSET

        return cls(letters, origin)

    def __len__(self) -> int:
        return int(self.letters.size)

    def __str__(self) -> str:
        return (self.letters + ASCII_OFFSET).tobytes().decode('ascii')

    def __repr__(self) -> str:
        return f"Word('{self.to_string(bar=self.origin > 0)}')"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented

        return self.origin == other.origin and np.array_equal(self.letters, other.letters)

    def __hash__(self) -> int:
        return hash((self.letters.tobytes(), self.origin))

    def to_string(self, bar: bool = False) -> str:
        text = str(self)

        if bar:
            return text[:self.origin] + '|' + text[self.origin:]

        return text

    @property
    def count_a(self) -> int:
        return int(np.count_nonzero(self.letters == LETTER_A))

    @property
    def count_b(self) -> int:
        return int(np.count_nonzero(self.letters == LETTER_B))

    def window(self, start: int, length: int) -> str:
        """The subword of ``length`` letters at ``start`` (relative to index 0)."""

        return str(Word(self.letters[start:start + length]))


class NmsRule(NamedTuple):
    """The deterministic noble means substitution zeta_{m,i}."""

    m: int
    i: int

    def image(self, letter: str) -> str:
        if letter == 'b':
            return 'a'

        return 'a' * self.i + 'b' + 'a' * (self.m - self.i)

    @property
    def matrix(self) -> np.ndarray:
        return substitution_matrix(self.m)


def substitution_matrix(m: int) -> np.ndarray:
    """The substitution matrix M_m = [[m, 1], [1, 0]] (column = letter substituted)."""

    raise_for_invalid_m(m)

    return np.array([[m, 1], [1, 0]], dtype=np.int64)


def letter_counts(w: Word) -> np.ndarray:
    """The abelianization (|w|_a, |w|_b)."""

    return np.array([w.count_a, w.count_b], dtype=np.int64)


def _images(m: int) -> Tuple[str, ...]:
    return tuple(NmsRule(m, i).image('a') for i in range(m + 1))


def _substitute(w: Word, m: int, branches: np.ndarray) -> Word:
    # ``branches`` holds one branch index per letter a, left to right.
    letters = w.letters

    lengths = np.where(letters == LETTER_A, m + 1, 1)
    offsets = np.zeros(letters.size + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])

    out = np.zeros(int(offsets[-1]), dtype=np.uint8)
    positions = offsets[:-1][letters == LETTER_A]
    out[positions + branches] = LETTER_B

    return Word(out, int(offsets[w.origin]))


def apply_nms(rule: NmsRule, w: Word) -> Word:
    """Apply the deterministic substitution ``rule`` letterwise to ``w``."""

    raise_for_invalid_branch(rule.i, rule.m)

    branches = np.full(w.count_a, rule.i, dtype=np.int64)

    return _substitute(w, rule.m, branches)


class RandomSubst(object):
    """The random noble means substitution zeta_m with its own random state.

    Parameters
    ----------
    m
        The family parameter.

    probs
        The probability vector (p_0, ..., p_m). Zero entries are accepted so
        that degenerate (deterministic) mixtures can be compared with
        ``zeta_{m,i}``.

    seed
        Seed of the PCG64 generator (an ``int`` or a ``numpy.random.SeedSequence``).
    """

    def __init__(self, m: int, probs=None, seed=None):
        raise_for_invalid_m(m)

        if probs is None:
            probs = [1 / (m + 1)] * (m + 1)

        raise_for_invalid_probs(probs, m, strict=False)

        self.m = int(m)
        self.probs = np.asarray(probs, dtype=float)

        if isinstance(seed, np.random.SeedSequence):
            self._seed_seq = seed
        else:
            self._seed_seq = np.random.SeedSequence(seed)

        self.rng = np.random.Generator(np.random.PCG64(self._seed_seq))

    def __repr__(self) -> str:
        return f'RandomSubst(m={self.m}, probs={tuple(self.probs.tolist())})'

    @property
    def support(self) -> Tuple[int, ...]:
        """The branches drawn with positive probability."""

        return tuple(int(i) for i in np.flatnonzero(self.probs > 0))

    def draw_branches(self, count: int) -> np.ndarray:
        """Draw ``count`` independent branch indices."""

        if count == 0:
            return np.zeros(0, dtype=np.int64)

        return self.rng.choice(self.m + 1, size=count, p=self.probs).astype(np.int64)

    def spawn(self, n: int):
        """Return ``n`` generators with the same law and independent random streams."""

        return [RandomSubst(self.m, self.probs, seed=child) for child in self._seed_seq.spawn(n)]


def apply_random(rs: RandomSubst, w: Word) -> Word:
    """Apply zeta_m once: every a picks its branch independently, drawn left to right."""

    return _substitute(w, rs.m, rs.draw_branches(w.count_a))


def iterate_random(rs: RandomSubst, seed: Word, k: int) -> Word:
    """Apply zeta_m ``k`` times to ``seed``, carrying the origin marker along."""

    raise_for_invalid_length(k, name='k', minimum=0)

    w = seed
    for _ in range(k):
        w = apply_random(rs, w)

    LOGGER.debug('Iterated zeta_%d %d times: %d letters.', rs.m, k, len(w))

    return w


def deterministic_iterate(rule: NmsRule, k: int, seed: Word = None) -> Word:
    """Apply zeta_{m,i} ``k`` times to ``seed`` (default ``b``)."""

    raise_for_invalid_length(k, name='k', minimum=0)

    w = Word.from_string('b') if seed is None else seed
    for _ in range(k):
        w = apply_nms(rule, w)

    return w


def realisations(m: int, w: str, k: int, branches: Iterable[int] = None,
                 limit: int = MAX_REALISATIONS) -> FrozenSet[str]:
    """Every realisation of the k-fold random image of ``w``.

    Parameters
    ----------
    branches
        The branches allowed for each letter a (default: all of them).

    limit
        The largest accepted number of distinct realisations.
    """

    raise_for_invalid_m(m)
    raise_for_invalid_length(k, name='k', minimum=0)

    if branches is None:
        branches = range(m + 1)

    images = {'a': sorted({NmsRule(m, i).image('a') for i in branches}), 'b': ['a']}

    current = {w}
    for _ in range(k):
        expanded = set()

        for word in current:
            partial = {''}
            for letter in word:
                partial = {head + tail for head in partial for tail in images[letter]}

            expanded |= partial
            raise_for_size_limit(len(expanded), limit, 'realisations')

        current = expanded

    return frozenset(current)


class LegalWordSet(NamedTuple):
    """The set D_{m,l} of legal words of length ``ell`` (as plain strings)."""

    m: int
    ell: int
    words: FrozenSet[str]

    def __contains__(self, word) -> bool:
        return str(word) in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def sorted(self) -> Tuple[str, ...]:
        return tuple(sorted(self.words))


def _image_prefix(u: str, m: int, ell: int) -> str:
    # Shortest prefix of u whose image covers every window starting in the image of u[0].
    first = m + 1 if u[0] == 'a' else 1
    needed = first - 1 + ell

    total = 0
    for end, letter in enumerate(u):
        total += m + 1 if letter == 'a' else 1

        if total >= needed:
            return u[:end + 1]

    return u


@lru_cache(maxsize=None)
def _prefix_images(prefix: str, m: int, branches: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], str], ...]:
    # All (branch choice, image) pairs of ``prefix``, one choice per letter a.
    images = _images(m)
    count_a = prefix.count('a')

    result = []
    for choice in product(branches, repeat=count_a):
        chosen = iter(choice)
        image = ''.join(images[next(chosen)] if letter == 'a' else 'a' for letter in prefix)
        result.append((choice, image))

    return tuple(result)


def window_images(u: str, m: int, branches: Tuple[int, ...]):
    """The induced substitution applied to the legal word ``u``.

    Yields one ``(choice, windows)`` pair per assignment of branches to the
    letters a that influence the result. ``windows`` are the length-|u| words
    starting at each position of the image of ``u[0]``, read left to right.
    """

    ell = len(u)
    prefix = _image_prefix(u, m, ell)
    first = m + 1 if u[0] == 'a' else 1

    for choice, image in _prefix_images(prefix, m, branches):
        yield choice, [image[j:j + ell] for j in range(first)]


def _seed_legal_word(m: int, ell: int, branch: int) -> str:
    w = Word.from_string('b')
    rule = NmsRule(m, branch)

    while len(w) < ell:
        w = apply_nms(rule, w)

    return w.window(0, ell)


@lru_cache(maxsize=None)
def _legal_closure(m: int, ell: int, branches: Tuple[int, ...], depth: int) -> FrozenSet[str]:
    start = _seed_legal_word(m, ell, branches[0])

    legal = {start}
    frontier = [start]
    rounds = 0

    while frontier:
        if rounds >= depth:
            msg_error = f'The legal words of length {ell} for m = {m} did not stabilise'
            msg_error += f' within {depth} closure rounds.'

            raise NotConvergedError(msg_error, iterations=rounds)

        fresh = []
        for u in frontier:
            for _, windows in window_images(u, m, branches):
                for v in windows:
                    if v not in legal:
                        legal.add(v)
                        fresh.append(v)

        LOGGER.debug('Closure round %d (m=%d, ell=%d): %d new words.', rounds, m, ell, len(fresh))

        frontier = fresh
        rounds += 1

    LOGGER.info('Closure of legal words (m=%d, ell=%d) reached %d words in %d rounds.',
                m, ell, len(legal), rounds)

    return frozenset(legal)


def legal_words(rs: RandomSubst, ell: int, depth: int = DEFAULT_CLOSURE_DEPTH) -> LegalWordSet:
    """The legal words D_{m,l} of length ``ell``.

    The set is the closure of one legal word under the induced substitution,
    where every branch is allowed. It never depends on ``rs.probs``.

    Raises
    ------
    NotConvergedError
        If the closure still grows after ``depth`` rounds.
    """

    raise_for_invalid_length(ell, name='ell')
    raise_for_invalid_length(depth, name='depth')

    branches = tuple(range(rs.m + 1))

    return LegalWordSet(rs.m, ell, _legal_closure(rs.m, ell, branches, depth))


def supported_legal_words(rs: RandomSubst, ell: int, depth: int = DEFAULT_CLOSURE_DEPTH) -> LegalWordSet:
    """Legal words of the sub-hull generated by the branches with positive probability."""

    raise_for_invalid_length(ell, name='ell')
    raise_for_invalid_length(depth, name='depth')

    return LegalWordSet(rs.m, ell, _legal_closure(rs.m, ell, rs.support, depth))


def scan_legal_words(m: int, ell: int, k_max: int, branches: Iterable[int] = None) -> FrozenSet[str]:
    """Brute force: every ``ell``-window of every realisation of zeta_m^k(b), k <= k_max."""

    raise_for_invalid_length(ell, name='ell')

    found = set()
    for k in range(k_max + 1):
        for word in realisations(m, 'b', k, branches):
            found.update(word[j:j + ell] for j in range(len(word) - ell + 1))

    return frozenset(found)


def complexity(rs: RandomSubst, ell: int, depth: int = DEFAULT_CLOSURE_DEPTH) -> int:
    """The complexity function C_m(l) = |D_{m,l}|, by exact enumeration."""

    raise_for_invalid_length(ell, name='ell', maximum=MAX_COMPLEXITY_ELL)

    return len(legal_words(rs, ell, depth))


def hull_seed(rs: RandomSubst) -> Word:
    """Return the two-sided seed ``a|a`` after checking that ``aa`` is legal."""

    if 'aa' not in legal_words(rs, 2):
        raise ValueError(f'The seed "{HULL_SEED}" is not legal for m = {rs.m}.')

    return Word.from_string(HULL_SEED)


def hull_sample(rs: RandomSubst, radius: int) -> Word:
    """A two-sided approximant of an element of the hull.

    Iterates zeta_m on ``a|a`` until at least ``radius`` letters lie on both
    sides of the origin.
    """

    raise_for_invalid_length(radius, name='radius')

    w = hull_seed(rs)
    while w.origin < radius or len(w) - w.origin < radius:
        w = apply_random(rs, w)

    return w

