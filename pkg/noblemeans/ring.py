# -*- coding: utf-8 -*-
"""
noblemeans.ring
---------------

Exact arithmetic in the quadratic ring Z[lambda_m], where lambda_m is the
inflation multiplier (m + sqrt(m^2 + 4))/2 with minimal polynomial
x^2 = m x + 1, and the star map into internal space, which replaces
lambda_m by its algebraic conjugate lambda'_m = (m - sqrt(m^2 + 4))/2.

Coefficients are Python integers, so nothing overflows or drifts. Conversion
to floating point (``value``, ``star``) is a separate, lossy step.

Example
-------
>>> from noblemeans.ring import RingElt
>>> lam = RingElt.generator(m=1)
>>> lam * lam
RingElt(p=1, q=1, m=1)
>>> round(lam.star(), 4)
-0.618
"""

__all__ = [
    'RingElt',
    'LatticePoint',
    'add',
    'mul',
    'star',
    'value',
    'inflation_multiplier',
    'algebraic_conjugate',
    'star_sign',
    'star_signs'
]

import math

from typing import NamedTuple

import mpmath
import numpy as np

from noblemeans.errors import FamilyMismatchError
from noblemeans.validators import raise_for_invalid_m


def inflation_multiplier(m: int) -> float:
    """Return lambda_m = (m + sqrt(m^2 + 4))/2."""

    raise_for_invalid_m(m)

    return (m + math.sqrt(m * m + 4)) / 2


def algebraic_conjugate(m: int) -> float:
    """Return lambda'_m = (m - sqrt(m^2 + 4))/2, computed without cancellation."""

    raise_for_invalid_m(m)

    # lambda * lambda' = -1
    return -2 / (m + math.sqrt(m * m + 4))


class RingElt(object):
    """The element p + q*lambda_m of Z[lambda_m].

    Parameters
    ----------
    p
        The rational part.

    q
        The coefficient of lambda_m.

    m
        The parameter of the noble means family.
    """

    __slots__ = ('_p', '_q', '_m')

    def __init__(self, p: int, q: int, m: int):
        raise_for_invalid_m(m)

        self._p = int(p)
        self._q = int(q)
        self._m = int(m)

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def m(self) -> int:
        return self._m

    @classmethod
    def from_int(cls, x: int, m: int) -> 'RingElt':
        return cls(x, 0, m)

    @classmethod
    def generator(cls, m: int) -> 'RingElt':
        """Return lambda_m itself."""

        return cls(0, 1, m)

    def _coerce(self, other) -> 'RingElt':
        if isinstance(other, RingElt):
            if other.m != self._m:
                msg_error = f'Cannot combine elements of Z[lambda_{self._m}] and Z[lambda_{other.m}].'

                raise FamilyMismatchError(msg_error)

            return other

        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return RingElt(int(other), 0, self._m)

        return NotImplemented

    def __repr__(self) -> str:
        return f'RingElt(p={self._p}, q={self._q}, m={self._m})'

    def __str__(self) -> str:
        return f'{self._p}{self._q:+}λ{self._m}'

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElt):
            return NotImplemented

        return (self._p, self._q, self._m) == (other.p, other.q, other.m)

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._m))

    def __add__(self, other) -> 'RingElt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other

        return RingElt(self._p + other.p, self._q + other.q, self._m)

    __radd__ = __add__

    def __neg__(self) -> 'RingElt':
        return RingElt(-self._p, -self._q, self._m)

    def __sub__(self, other) -> 'RingElt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other) -> 'RingElt':
        return (-self) + other

    def __mul__(self, other) -> 'RingElt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other

        # lambda^2 = m*lambda + 1
        p = self._p * other.p + self._q * other.q
        q = self._p * other.q + self._q * other.p + self._m * self._q * other.q

        return RingElt(p, q, self._m)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'RingElt':
        if n < 0:
            return self.inverse() ** (-n)

        result = RingElt(1, 0, self._m)
        base = self

        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1

        return result

    @property
    def conjugate(self) -> 'RingElt':
        """The Galois conjugate, as a ring element: lambda' = m - lambda."""

        return RingElt(self._p + self._m * self._q, -self._q, self._m)

    @property
    def norm(self) -> int:
        """The field norm x * x' = p^2 + m p q - q^2."""

        return self._p * self._p + self._m * self._p * self._q - self._q * self._q

    def inverse(self) -> 'RingElt':
        """Return the inverse of a unit (norm +1 or -1)."""

        if self.norm == 1:
            return self.conjugate
        if self.norm == -1:
            return -self.conjugate

        raise ZeroDivisionError(f'{self!r} is not a unit of Z[lambda_{self._m}].')

    def value(self) -> float:
        """The physical coordinate p + q*lambda_m as a float."""

        return self._p + self._q * inflation_multiplier(self._m)

    def star(self) -> float:
        """The internal coordinate p + q*lambda'_m as a float."""

        return self._p + self._q * algebraic_conjugate(self._m)

    def value_mp(self):
        """The physical coordinate as an ``mpmath.mpf`` at the working precision."""

        s = mpmath.sqrt(self._m * self._m + 4)

        return self._p + self._q * (self._m + s) / 2

    def star_mp(self):
        """The internal coordinate as an ``mpmath.mpf`` at the working precision."""

        s = mpmath.sqrt(self._m * self._m + 4)

        return self._p + self._q * (self._m - s) / 2


class LatticePoint(NamedTuple):
    """A point (x, x') of the lattice L_m = {(x, x*) | x in Z[lambda_m]}."""

    physical: float
    internal: float
    source: RingElt

    @classmethod
    def from_ring(cls, x: RingElt) -> 'LatticePoint':
        return cls(physical=x.value(), internal=x.star(), source=x)


def add(x: RingElt, y: RingElt) -> RingElt:
    """Add two elements of the same ring; raises ``FamilyMismatchError`` otherwise."""

    if not isinstance(y, RingElt) or x.m != y.m:
        raise FamilyMismatchError(f'Cannot add {x!r} and {y!r}.')

    return x + y


def mul(x: RingElt, y: RingElt) -> RingElt:
    """Multiply two elements of the same ring; raises ``FamilyMismatchError`` otherwise."""

    if not isinstance(y, RingElt) or x.m != y.m:
        raise FamilyMismatchError(f'Cannot multiply {x!r} and {y!r}.')

    return x * y


def value(x: RingElt) -> float:
    return x.value()


def star(x: RingElt) -> float:
    return x.star()


def _sign_of_star(p: int, q: int, m: int) -> int:
    # 2 * star = a - q*s with a = 2p + m q and s = sqrt(m^2 + 4) irrational.
    a = 2 * p + m * q

    if q == 0:
        return (a > 0) - (a < 0)

    gap = a * a - q * q * (m * m + 4)

    if q > 0:
        return -1 if a <= 0 else (1 if gap > 0 else -1)

    return 1 if a >= 0 else (-1 if gap > 0 else 1)


def star_sign(x: RingElt) -> int:
    """Return the exact sign (-1, 0, 1) of star(x)."""

    return _sign_of_star(x.p, x.q, x.m)


def star_signs(p: np.ndarray, q: np.ndarray, m: int) -> np.ndarray:
    """Vectorised exact sign of p + q*lambda'_m for integer arrays ``p`` and ``q``.

    The comparison squares the coefficients; arrays whose entries could
    overflow int64 are processed as Python integers.
    """

    p = np.asarray(p)
    q = np.asarray(q)

    bound = max(int(np.abs(p).max(initial=0)), int(np.abs(q).max(initial=0)))

    if bound > 10 ** 8:
        signs = [_sign_of_star(int(a), int(b), m) for a, b in zip(p.ravel(), q.ravel())]

        return np.array(signs, dtype=np.int8).reshape(p.shape)

    p = p.astype(np.int64)
    q = q.astype(np.int64)

    a = 2 * p + m * q
    gap = a * a - q * q * (m * m + 4)

    sign_a = np.sign(a)
    sign_gap = np.where(gap > 0, 1, -1)

    positive_q = np.where(a <= 0, -1, sign_gap)
    negative_q = np.where(a >= 0, 1, -sign_gap)

    signs = np.where(q == 0, sign_a, np.where(q > 0, positive_q, negative_q))

    return signs.astype(np.int8)
