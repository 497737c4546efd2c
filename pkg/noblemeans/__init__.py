# -*- coding: utf-8 -*-
"""
noblemeans
----------

Noblemeans implements the noble means substitutions, their random local
mixtures and what is computed from them: exact words and topological
entropy, word frequencies, cut-and-project geometry and the diffraction of
the random Fibonacci family.

Example
-------
Entropy of the random Fibonacci substitution:

>>> from noblemeans.exact import entropy_series
>>> round(entropy_series(m=1).value, 3)
0.444

Frequency of the letter a:

>>> from noblemeans.subst import RandomSubst
>>> from noblemeans.measure import build_induced, cylinder_measure
>>> system = build_induced(RandomSubst(m=1, probs=(0.5, 0.5)), ell=1)
>>> round(cylinder_measure(system, 'a'), 4)
0.618
"""

__all__ = [
    'ring',
    'subst',
    'exact',
    'measure',
    'geometry',
    'diffraction',
    'filters',
    'validators',
    'consts'
]

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__

from noblemeans import ring
from noblemeans import subst
from noblemeans import exact
from noblemeans import measure
from noblemeans import geometry
from noblemeans import diffraction
from noblemeans import filters
from noblemeans import validators
from noblemeans import consts
