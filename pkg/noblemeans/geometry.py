# -*- coding: utf-8 -*-
"""
noblemeans.geometry
-------------------

Cut-and-project description of noble means point sets.

A word over {a, b} is realised on the line by intervals of length lambda_m
(for a) and 1 (for b), with the left endpoints as control points. Every
control point lies in Z[lambda_m], so it is stored exactly as a pair of
integer arrays ``(p, q)`` (the point is p + q lambda_m). The star map sends it
to internal space, where the windows W_{m,i} of the deterministic rules and
the super window W_m of the random rule live.

Window membership is decided exactly with ring sign tests; floats are only
used for export.
"""

__all__ = [
    'ControlPointSet',
    'Lift',
    'Endpoint',
    'Window',
    'realize',
    'lift',
    'inflate',
    'window',
    'super_window',
    'union_strictly_inside',
    'meyer_check',
    'lift_rows',
    'strip_export',
    'histogram_export'
]

import logging

from typing import List, NamedTuple

import numpy as np

from noblemeans.consts import DEFAULT_HISTOGRAM_BINS, LETTER_A, LETTER_B, MEYER_PAIR_CAP, SINGULAR_SEEDS
from noblemeans.ring import LatticePoint, RingElt, algebraic_conjugate, inflation_multiplier, star_signs
from noblemeans.subst import NmsRule, Word
from noblemeans.validators import raise_for_invalid_branch, raise_for_invalid_length, raise_for_invalid_m


LOGGER = logging.getLogger(__name__)


class ControlPointSet(NamedTuple):
    """Control points p + q lambda_m of a realised word, in order, with their letters."""

    m: int
    p: np.ndarray
    q: np.ndarray
    letters: np.ndarray

    def __len__(self) -> int:
        return int(self.p.size)

    @property
    def physical(self) -> np.ndarray:
        return self.p + self.q * inflation_multiplier(self.m)

    @property
    def internal(self) -> np.ndarray:
        return self.p + self.q * algebraic_conjugate(self.m)

    @property
    def points(self) -> List[LatticePoint]:
        return [LatticePoint.from_ring(RingElt(p, q, self.m)) for p, q in zip(self.p.tolist(), self.q.tolist())]


class Lift(NamedTuple):
    """Internal coordinates of control points, tagged by letter."""

    internal: np.ndarray
    letters: np.ndarray


def realize(w: Word, m: int, origin_at: int = None) -> ControlPointSet:
    """Geometric realisation of ``w`` with the letter at ``origin_at`` placed at 0.

    Parameters
    ----------
    w
        The word.

    m
        The family parameter, fixing the length lambda_m of an a-interval.

    origin_at
        Index of the letter at coordinate 0. Defaults to ``w.origin``.
    """

    raise_for_invalid_m(m)

    if origin_at is None:
        origin_at = w.origin

    if not (0 <= origin_at <= len(w)):
        raise ValueError(f'The origin "{origin_at}" is invalid. The range is 0 to {len(w)}.')

    letters = w.letters

    # Counts of a and b before every position.
    a_before = np.zeros(letters.size + 1, dtype=np.int64)
    b_before = np.zeros(letters.size + 1, dtype=np.int64)
    np.cumsum(letters == LETTER_A, out=a_before[1:])
    np.cumsum(letters == LETTER_B, out=b_before[1:])

    p = b_before[:-1] - b_before[origin_at]
    q = a_before[:-1] - a_before[origin_at]

    return ControlPointSet(m, p, q, letters.copy())


def lift(ps: ControlPointSet) -> Lift:
    """Star images of the control points."""

    return Lift(ps.internal, ps.letters)


def inflate(ps: ControlPointSet, rule: NmsRule) -> ControlPointSet:
    """Inflate by lambda_m and replace every interval by the intervals of its image."""

    raise_for_invalid_branch(rule.i, rule.m)

    if rule.m != ps.m:
        raise ValueError(f'The rule for m = {rule.m} cannot inflate a point set for m = {ps.m}.')

    # lambda (p + q lambda) = q + (p + m q) lambda
    p = ps.q
    q = ps.p + ps.m * ps.q

    a_image = Word.from_string(rule.image('a'))
    a_offsets = realize(a_image, ps.m, origin_at=0)

    is_a = ps.letters == LETTER_A
    repeats = np.where(is_a, ps.m + 1, 1)

    out_p = np.repeat(p, repeats)
    out_q = np.repeat(q, repeats)
    out_letters = np.full(out_p.size, LETTER_A, dtype=np.uint8)

    starts = np.zeros(ps.letters.size, dtype=np.int64)
    np.cumsum(repeats[:-1], out=starts[1:])

    # Offsets and letters inside the image of every a.
    within = (starts[is_a][:, None] + np.arange(ps.m + 1)).ravel()
    out_p[within] += np.tile(a_offsets.p, int(is_a.sum()))
    out_q[within] += np.tile(a_offsets.q, int(is_a.sum()))
    out_letters[within] = np.tile(a_image.letters, int(is_a.sum()))

    return ControlPointSet(ps.m, out_p, out_q, out_letters)


class Endpoint(NamedTuple):
    """The internal coordinate star(num)/den of a window endpoint (den > 0)."""

    num: RingElt
    den: int

    @property
    def value(self) -> float:
        return self.num.star() / self.den


def _compare(left: Endpoint, right: Endpoint) -> int:
    # Sign of left - right, decided in the ring.
    difference = right.den * left.num - left.den * right.num

    return int(star_signs(np.array([difference.p]), np.array([difference.q]), difference.m)[0])


class Window(NamedTuple):
    """An interval of internal space with exact endpoints and open or closed ends.

    ``kind`` is ``'generic'`` (0 < i < m), ``'singular-left'`` (i = 0),
    ``'singular-right'`` (i = m) or ``'super'``.
    """

    kind: str
    m: int
    i: int
    seed: str
    lo: Endpoint
    hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def bounds(self):
        return self.lo.value, self.hi.value

    def closure(self) -> 'Window':
        return self._replace(lo_closed=True, hi_closed=True)

    def contains(self, x: RingElt) -> bool:
        """Exact membership of star(x)."""

        ps = ControlPointSet(self.m, np.array([x.p]), np.array([x.q]), np.zeros(1, dtype=np.uint8))

        return bool(self.contains_points(ps)[0])

    def contains_points(self, ps: ControlPointSet) -> np.ndarray:
        """Exact membership of the star images of every control point."""

        if ps.m != self.m:
            raise ValueError(f'The window for m = {self.m} cannot test points for m = {ps.m}.')

        above = star_signs(self.lo.den * ps.p - self.lo.num.p, self.lo.den * ps.q - self.lo.num.q, self.m)
        below = star_signs(self.hi.den * ps.p - self.hi.num.p, self.hi.den * ps.q - self.hi.num.q, self.m)

        inside_lo = above >= 0 if self.lo_closed else above > 0
        inside_hi = below <= 0 if self.hi_closed else below < 0

        return inside_lo & inside_hi

    def to_record(self) -> dict:
        lo, hi = self.bounds

        return {
            'kind': self.kind,
            'm': self.m,
            'i': self.i,
            'seed': self.seed,
            'lo': lo,
            'hi': hi,
            'lo_closed': self.lo_closed,
            'hi_closed': self.hi_closed
        }


def window(m: int, i: int, seed: str = None) -> Window:
    """The window W_{m,i} of the deterministic rule zeta_{m,i}.

    For 0 < i < m this is the closed interval i tau_m + [lambda', 1] with
    tau_m = -(lambda' + 1)/m. The windows of i = 0 and i = m are half-open,
    and which end is open depends on the legal two-letter seed:

    ======  ======  ======================
    i       seed    window
    ======  ======  ======================
    0       a|a     [lambda', 1)
    0       a|b     (lambda', 1]
    m       a|a     (-1, -lambda']
    m       b|a     [-1, -lambda')
    ======  ======  ======================
    """

    raise_for_invalid_branch(i, m)

    if 0 < i < m:
        lo = Endpoint(RingElt(-i, m - i, m), m)
        hi = Endpoint(RingElt(m - i, -i, m), m)

        return Window('generic', m, i, None, lo, hi)

    side = 'first' if i == 0 else 'last'

    if seed not in SINGULAR_SEEDS[side]:
        msg_error = f'The seed "{seed}" is invalid for the window W_({m},{i}).'
        msg_error += f' Enter one of {SINGULAR_SEEDS[side]}.'

        raise ValueError(msg_error)

    if i == 0:
        lo = Endpoint(RingElt(0, 1, m), 1)
        hi = Endpoint(RingElt(1, 0, m), 1)
        lo_closed = seed == 'a|a'

        return Window('singular-left', m, i, seed, lo, hi, lo_closed, not lo_closed)

    lo = Endpoint(RingElt(-1, 0, m), 1)
    hi = Endpoint(RingElt(0, -1, m), 1)
    hi_closed = seed == 'a|a'

    return Window('singular-right', m, i, seed, lo, hi, not hi_closed, hi_closed)


def super_window(m: int) -> Window:
    """The window W_m = [lambda' - 1, 1 - lambda'] of the random rule."""

    raise_for_invalid_m(m)

    return Window('super', m, None, None, Endpoint(RingElt(-1, 1, m), 1), Endpoint(RingElt(1, -1, m), 1))


def union_strictly_inside(m: int) -> bool:
    """Check with exact comparisons that every W_{m,i} lies strictly inside W_m."""

    outer = super_window(m)

    for i in range(m + 1):
        seeds = [None] if 0 < i < m else SINGULAR_SEEDS['first' if i == 0 else 'last']

        for seed in seeds:
            inner = window(m, i, seed)

            if _compare(outer.lo, inner.lo) >= 0 or _compare(inner.hi, outer.hi) >= 0:
                return False

    return True


def meyer_check(ps: ControlPointSet, cap: int = MEYER_PAIR_CAP, chunk: int = 512) -> dict:
    """Gap bounds of a finite patch and the separation of its difference set.

    The difference set is computed exactly on the first ``cap`` points, in
    chunks of rows.

    Returns ``{points, min_gap, max_gap, uniformly_discrete, relatively_dense,
    difference_points, difference_count, min_difference_separation}``.
    """

    lam = inflation_multiplier(ps.m)
    gaps_p = np.diff(ps.p)
    gaps_q = np.diff(ps.q)
    gaps = gaps_p + gaps_q * lam

    n = min(len(ps), cap)
    p, q = ps.p[:n], ps.q[:n]

    differences = np.zeros((0, 2), dtype=np.int64)
    for start in range(0, n, chunk):
        block = np.stack([
            (p[start:start + chunk, None] - p[None, :]).ravel(),
            (q[start:start + chunk, None] - q[None, :]).ravel()
        ], axis=1)
        differences = np.unique(np.concatenate([differences, block]), axis=0)

    values = np.sort(differences[:, 0] + differences[:, 1] * lam)
    separation = float(np.min(np.diff(values))) if values.size > 1 else float('inf')

    report = {
        'points': len(ps),
        'min_gap': float(gaps.min()) if gaps.size else float('inf'),
        'max_gap': float(gaps.max()) if gaps.size else 0.0,
        'uniformly_discrete': bool(separation > 0),
        'relatively_dense': bool(gaps.size == 0 or gaps.max() <= lam + 1e-12),
        'difference_points': n,
        'difference_count': int(differences.shape[0]),
        'min_difference_separation': separation
    }

    LOGGER.info('Meyer check on %d points: %d distinct differences, separation %.6f.',
                n, report['difference_count'], separation)

    return report


def lift_rows(ps: ControlPointSet) -> List[dict]:
    """CSV rows ``physical, internal, letter`` of a realisation."""

    letters = np.where(ps.letters == LETTER_A, 'a', 'b')

    return [
        {'physical': x, 'internal': y, 'letter': letter}
        for x, y, letter in zip(ps.physical.tolist(), ps.internal.tolist(), letters.tolist())
    ]


def strip_export(m: int, max_pq: int = 5) -> dict:
    """Lattice points of L_m with |p|, |q| <= ``max_pq`` and the windows of the family.

    Each point row tells whether its star image lies in the union of the
    W_{m,i} (closures) and in W_m.
    """

    raise_for_invalid_m(m)
    raise_for_invalid_length(max_pq, name='max_pq', minimum=0)

    grid = np.arange(-max_pq, max_pq + 1, dtype=np.int64)
    p, q = (values.ravel() for values in np.meshgrid(grid, grid, indexing='ij'))
    ps = ControlPointSet(m, p, q, np.zeros(p.size, dtype=np.uint8))

    windows = []
    for i in range(m + 1):
        seeds = [None] if 0 < i < m else SINGULAR_SEEDS['first' if i == 0 else 'last'][:1]
        windows.extend(window(m, i, seed) for seed in seeds)

    in_union = np.zeros(p.size, dtype=bool)
    for w in windows:
        in_union |= w.closure().contains_points(ps)

    outer = super_window(m)
    in_super = outer.contains_points(ps)

    rows = [
        {'p': a, 'q': b, 'physical': x, 'internal': y, 'in_union': u, 'in_super': s}
        for a, b, x, y, u, s in zip(
            p.tolist(), q.tolist(), ps.physical.tolist(), ps.internal.tolist(),
            in_union.tolist(), in_super.tolist()
        )
    ]

    return {'points': rows, 'windows': [w.to_record() for w in windows + [outer]]}


def histogram_export(lifted: Lift, bins: int = DEFAULT_HISTOGRAM_BINS, value_range=None, m: int = None) -> List[dict]:
    """Histogram rows ``bin_lo, bin_hi, count_a, count_b`` of internal coordinates.

    Parameters
    ----------
    lifted
        The lifted points.

    bins
        The number of bins.

    value_range
        The histogram range. Defaults to the super window of ``m``.

    m
        The family parameter, used for the default range.
    """

    raise_for_invalid_length(bins, name='bins')

    if lifted.internal.size == 0:
        return []

    if value_range is None:
        if m is None:
            value_range = (float(lifted.internal.min()), float(lifted.internal.max()))
        else:
            value_range = super_window(m).bounds

    is_a = lifted.letters == LETTER_A
    count_a, edges = np.histogram(lifted.internal[is_a], bins=bins, range=value_range)
    count_b, _ = np.histogram(lifted.internal[~is_a], bins=bins, range=value_range)

    return [
        {'bin_lo': lo, 'bin_hi': hi, 'count_a': a, 'count_b': b}
        for lo, hi, a, b in zip(edges[:-1].tolist(), edges[1:].tolist(), count_a.tolist(), count_b.tolist())
    ]
