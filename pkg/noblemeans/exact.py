# -*- coding: utf-8 -*-
"""
noblemeans.exact
----------------

Exact random noble means words and the topological entropy of zeta_m.

The exact words of generation ``n`` follow the concatenation rule

    G_{m,1} = {b},  G_{m,2} = {a},
    G_{m,n} = union over i of  G_{m,n-1} ... G_{m,n-2} ... G_{m,n-1}

where the (m + 1)-fold product has ``G_{m,n-2}`` in slot ``i`` and
``G_{m,n-1}`` in every other slot. They are exactly the realisations of
zeta_m^(n-1)(b), which ``process_equality_check`` verifies by enumeration.

All logarithms are natural, so entropies are in nats per letter.
"""

__all__ = [
    'ExactWordSet',
    'EntropyResult',
    'exact_length',
    'exact_words',
    'process_equality_check',
    'word_distribution',
    'substitution_distribution',
    'process_distribution_check',
    'entropy_series',
    'entropy_table',
    'entropy_empirical',
    'exact_record'
]

import logging
import math

from itertools import product
from typing import Dict, FrozenSet, List, NamedTuple

import numpy as np

from noblemeans.consts import DEFAULT_ENTROPY_TRUNCATION, MAX_EXACT_WORDS
from noblemeans.ring import algebraic_conjugate, inflation_multiplier
from noblemeans.subst import NmsRule, realisations
from noblemeans.validators import (
    raise_for_invalid_length,
    raise_for_invalid_m,
    raise_for_invalid_probs,
    raise_for_size_limit
)


LOGGER = logging.getLogger(__name__)


class ExactWordSet(NamedTuple):
    """The deduplicated set G_{m,n}; every member has ``length`` letters."""

    m: int
    n: int
    words: FrozenSet[str]
    length: int

    @property
    def count(self) -> int:
        return len(self.words)


class EntropyResult(NamedTuple):
    """A truncated entropy series with a certified bound on the neglected tail."""

    m: int
    truncation: int
    value: float
    tail_bound: float


def exact_length(m: int, n: int) -> int:
    """l_{m,n}: l_{m,1} = l_{m,2} = 1 and l_{m,n} = m l_{m,n-1} + l_{m,n-2}."""

    raise_for_invalid_m(m)
    raise_for_invalid_length(n, name='n')

    older, newer = 1, 1
    for _ in range(n - 2):
        older, newer = newer, m * newer + older

    return newer


def _slots(previous, older, m: int, i: int):
    return [older if j == i else previous for j in range(m + 1)]


def exact_words(m: int, n: int, limit: int = MAX_EXACT_WORDS) -> ExactWordSet:
    """Build G_{m,n} by the concatenation rule.

    Parameters
    ----------
    m
        The family parameter.

    n
        The generation, n >= 1.

    limit
        The largest accepted number of words per generation.

    Raises
    ------
    SizeLimitError
        If the concatenation provably yields more than ``limit`` words. Words
        of a generation have a fixed length, so concatenation is injective
        and ``|G_{m,n-1}|^m |G_{m,n-2}|`` is a lower bound.
    """

    raise_for_invalid_m(m)
    raise_for_invalid_length(n, name='n')

    older, previous = frozenset({'b'}), frozenset({'a'})

    if n == 1:
        return ExactWordSet(m, 1, older, 1)

    for generation in range(3, n + 1):
        lower_bound = len(previous) ** m * len(older)
        raise_for_size_limit(lower_bound, limit, f'G_({m},{generation})')

        union = set()
        produced = 0

        for i in range(m + 1):
            branch = {''.join(parts) for parts in product(*_slots(previous, older, m, i))}
            produced += len(branch)
            union |= branch

        raise_for_size_limit(len(union), limit, f'G_({m},{generation})')

        LOGGER.debug('G_(%d,%d): %d words, %d shared between branches.',
                     m, generation, len(union), produced - len(union))

        older, previous = previous, frozenset(union)

    return ExactWordSet(m, n, previous, exact_length(m, n))


def process_equality_check(m: int, n: int, limit: int = MAX_EXACT_WORDS) -> bool:
    """Check that G_{m,n} equals the set of all realisations of zeta_m^(n-1)(b)."""

    raise_for_invalid_length(n, name='n')

    concatenated = exact_words(m, n, limit).words
    substituted = realisations(m, 'b', n - 1, limit=limit)

    return concatenated == substituted


def word_distribution(m: int, n: int, probs, limit: int = MAX_EXACT_WORDS) -> Dict[str, float]:
    """The law of the concatenation process at generation ``n``.

    Slot words are drawn independently, and branch ``i`` is chosen with
    probability ``probs[i]``.
    """

    raise_for_invalid_probs(probs, m, strict=False)
    raise_for_invalid_length(n, name='n')

    probs = [float(p) for p in probs]
    older, previous = {'b': 1.0}, {'a': 1.0}

    if n == 1:
        return dict(older)

    for generation in range(3, n + 1):
        raise_for_size_limit(len(previous) ** m * len(older), limit, f'G_({m},{generation})')

        law = {}
        for i, p_i in enumerate(probs):
            if p_i == 0:
                continue

            for parts in product(*[slot.items() for slot in _slots(previous, older, m, i)]):
                word = ''.join(word for word, _ in parts)
                weight = p_i * math.prod(p for _, p in parts)
                law[word] = law.get(word, 0.0) + weight

        older, previous = previous, law

    return previous


def substitution_distribution(m: int, w: str, k: int, probs, limit: int = MAX_EXACT_WORDS) -> Dict[str, float]:
    """The law of zeta_m^k(w), every letter a choosing its branch independently."""

    raise_for_invalid_probs(probs, m, strict=False)
    raise_for_invalid_length(k, name='k', minimum=0)

    images = [(NmsRule(m, i).image('a'), float(p)) for i, p in enumerate(probs) if p > 0]

    law = {w: 1.0}
    for _ in range(k):
        expanded = {}

        for word, weight in law.items():
            partial = {'': weight}

            for letter in word:
                options = images if letter == 'a' else [('a', 1.0)]
                grown = {}

                for head, q in partial.items():
                    for tail, p in options:
                        grown[head + tail] = grown.get(head + tail, 0.0) + q * p

                partial = grown

            for word_out, q in partial.items():
                expanded[word_out] = expanded.get(word_out, 0.0) + q

            raise_for_size_limit(len(expanded), limit, 'realisations')

        law = expanded

    return law


def process_distribution_check(m: int, n: int, probs, atol: float = 1e-12) -> bool:
    """Check that concatenation and substitution give the same law at generation ``n``."""

    concatenated = word_distribution(m, n, probs)
    substituted = substitution_distribution(m, 'b', n - 1, probs)

    if set(concatenated) != set(substituted):
        return False

    return all(abs(concatenated[w] - substituted[w]) <= atol for w in concatenated)


def entropy_series(m: int, truncation: int = DEFAULT_ENTROPY_TRUNCATION) -> EntropyResult:
    """Topological entropy H_m of zeta_m from its series representation.

    H_m = (lambda - 1)/(1 - lambda') * sum_{i >= 2} log(m (i - 1) + 1) / lambda^i

    The tail after ``truncation`` terms is majorised with
    log(m (i - 1) + 1) <= log m + log(T + 1) + (i - T - 1)/(T + 1) for i > T,
    summed in closed form against the geometric weights.

    Parameters
    ----------
    m
        The family parameter.

    truncation
        The last index T of the partial sum, T >= 2.
    """

    raise_for_invalid_m(m)
    raise_for_invalid_length(truncation, name='truncation', minimum=2)

    lam = inflation_multiplier(m)
    prefactor = (lam - 1) / (1 - algebraic_conjugate(m))

    i = np.arange(2, truncation + 1, dtype=float)
    partial = float(np.sum(np.log(m * (i - 1) + 1) / lam ** i))

    r = 1 / lam
    t = truncation
    head = math.log(m) + math.log(t + 1)
    tail = r ** (t + 1) * (head / (1 - r) + r / ((t + 1) * (1 - r) ** 2))

    return EntropyResult(m, truncation, prefactor * partial, prefactor * tail)


def entropy_table(ms=(1, 2, 3, 4), truncation: int = DEFAULT_ENTROPY_TRUNCATION) -> List[dict]:
    """Rows ``{'m', 'value', 'tail_bound', 'truncation'}`` of the entropy table."""

    rows = []
    for m in ms:
        result = entropy_series(m, truncation)
        rows.append(
            {
                'm': m,
                'value': result.value,
                'tail_bound': result.tail_bound,
                'truncation': result.truncation
            }
        )

    return rows


def entropy_empirical(m: int, n: int, limit: int = MAX_EXACT_WORDS) -> float:
    """log |G_{m,n}| / l_{m,n}."""

    words = exact_words(m, n, limit)

    return math.log(words.count) / words.length


def exact_record(words: ExactWordSet, max_words: int = 1000) -> dict:
    """JSON-ready record ``{m, n, length, count, words?}``.

    The word list is included only when there are at most ``max_words`` of them.
    """

    record = {'m': words.m, 'n': words.n, 'length': words.length, 'count': words.count}

    if words.count <= max_words:
        record['words'] = sorted(words.words)

    return record
