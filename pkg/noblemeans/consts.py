# -*- coding: utf-8 -*-
"""
noblemeans.consts
-----------------

This module contains all constant values used in the noblemeans package.
"""

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__


# Letters are stored as uint8 codes, a word serialises as ASCII (code + ord('a')).
LETTER_A = 0
LETTER_B = 1
ALPHABET = ('a', 'b')
ASCII_OFFSET = ord('a')

# Seeds of the two-sided hull approximants.
HULL_SEED = 'a|a'
SINGULAR_SEEDS = {
    'first': ('a|a', 'a|b'),  # i = 0
    'last': ('a|a', 'b|a'),   # i = m
}

# Legal words and exact words.
DEFAULT_CLOSURE_DEPTH = 64
MAX_COMPLEXITY_ELL = 20
MAX_EXACT_WORDS = 2000000
MAX_REALISATIONS = 2000000

# Entropy series.
DEFAULT_ENTROPY_TRUNCATION = 60

# Perron-Frobenius data.
PF_TOLERANCE = 1e-12
PF_MAX_ITERATIONS = 100000
BIRKHOFF_SIGMAS = 4.0

# Geometry.
MEYER_PAIR_CAP = 10000
DEFAULT_HISTOGRAM_BINS = 200

# Diffraction (m = 1 only).
PHASE_DPS = 50
PP_DEFAULT_N = 48
PP_CAUCHY_TOLERANCE = 1e-6
PP_CAUCHY_WINDOW = 3
IFS_EPSILON = 1e-8
AC_DEFAULT_TRUNCATION = 48
AC_TAIL_WINDOW = 5
DEFAULT_KGRID = (0.0, 3.0, 1e-3)

# CLI exit codes.
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_RESOURCE_LIMIT = 3

OUTPUT_FORMATS = ('csv', 'json', 'svg')

# SVG charts.
SVG_NAMESPACE = 'http://www.w3.org/2000/svg'
SVG_WIDTH = 800
SVG_HEIGHT = 480
SVG_MARGIN = 48
SERIES_COLORS = {
    'a': '#1b3a6b',   # dark
    'b': '#9db7e0',   # light
    'pp': '#1b3a6b',
    'ac': '#c0392b',
}

# Command line parameters and their defaults.
CLI_DEFAULTS = {
    'words': {'iters': 5, 'seed_word': 'b', 'exact': False, 'gen': None, 'limit': MAX_EXACT_WORDS},
    'legal': {'ell': 2, 'depth': DEFAULT_CLOSURE_DEPTH},
    'entropy': {'m_max': 4, 'truncation': DEFAULT_ENTROPY_TRUNCATION},
    'freqs': {'ell': 1},
    'birkhoff': {'word': 'a', 'N': 10000, 'trials': 20, 'offset': 0},
    'lift': {'iters': 20, 'hist_bins': DEFAULT_HISTOGRAM_BINS, 'points': False},
    'strip': {'pq_max': 5},
    'diffract': {
        'pp': False,
        'ac': False,
        'pq_max': 10,
        'kmax': DEFAULT_KGRID[1],
        'kstep': DEFAULT_KGRID[2],
        'truncation': AC_DEFAULT_TRUNCATION,
        'n': PP_DEFAULT_N,
        'empirical_iters': None
    },
}

# Smallest accepted value of the integer parameters, per command.
CLI_PARAM_MINIMA = {
    'words': {'iters': 0, 'gen': 1, 'limit': 1},
    'legal': {'ell': 1, 'depth': 1},
    'entropy': {'m_max': 1, 'truncation': 2},
    'freqs': {'ell': 1},
    'birkhoff': {'N': 1, 'trials': 2},
    'lift': {'iters': 0, 'hist_bins': 1},
    'strip': {'pq_max': 0},
    'diffract': {'pq_max': 0, 'truncation': 3, 'n': PP_CAUCHY_WINDOW + 1, 'empirical_iters': 0},
}

# Real parameters that must be strictly positive.
CLI_POSITIVE_PARAMS = {
    'diffract': ('kmax', 'kstep'),
}

# Parameters holding a word over {a, b}.
CLI_WORD_PARAMS = {
    'words': ('seed_word',),
    'birkhoff': ('word',),
}
