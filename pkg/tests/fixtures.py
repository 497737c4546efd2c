# -*- coding: utf-8 -*-
"""Fixtures for use of tests."""

import math


GOLDEN_MEAN = (1 + math.sqrt(5)) / 2

# Topological entropy of zeta_m (natural logarithm), m = 1 .. 4.
ENTROPY_TABLE = {
    1: 0.44439,
    2: 0.40855,
    3: 0.37139,
    4: 0.33862,
}

# log |G_{1,n}| / l_{1,n} for small n.
EMPIRICAL_ENTROPY_M1 = {
    3: 0.3466,
    4: 0.3662,
    5: 0.4159,
}

# Exact random Fibonacci words.
EXACT_WORDS_M1 = {
    1: {'b'},
    2: {'a'},
    3: {'ab', 'ba'},
    4: {'aab', 'aba', 'baa'},
}

EXACT_COUNTS_M1 = {5: 8}

EXACT_WORDS_M2 = {
    3: {'aab', 'aba', 'baa'},
}

# l_{m,n} for n = 1, 2, ...
EXACT_LENGTHS = {
    1: [1, 1, 2, 3, 5, 8, 13, 21],
    2: [1, 1, 3, 7, 17, 41],
}

# Legal words of the random Fibonacci hull.
LEGAL_WORDS_M1 = {
    1: {'a', 'b'},
    2: {'aa', 'ab', 'ba', 'bb'},
    3: {'aaa', 'aab', 'aba', 'abb', 'baa', 'bab', 'bba'},
}

# Legal words of the deterministic Fibonacci hull (a -> ab, b -> a).
LEGAL_WORDS_FIBONACCI = {
    2: {'aa', 'ab', 'ba'},
    3: {'aab', 'aba', 'baa', 'bab'},
}

# |zeta_1^k(b)| = F_{k+1}.
FIBONACCI_LENGTHS = {
    20: 10946,
    31: 2178309,
}

# The ell = 2 induced matrix of zeta_{1,1} on the alphabet (aa, ab, ba).
INDUCED_MATRIX_FIBONACCI_ELL2 = [
    [0, 0, 1],
    [1, 1, 0],
    [1, 1, 0],
]

# Bragg amplitude of the random Fibonacci set at k = 0 (uniform probabilities).
PP_AMPLITUDE_AT_ZERO = 0.5236

SAMPLE_CONFIG = {
    'command': 'freqs',
    'm': 2,
    'probs': [0.25, 0.5, 0.25],
    'seed': 11,
    'params': {'ell': 2, 'format': 'json'}
}
