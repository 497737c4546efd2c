# -*- coding: utf-8 -*-
"""
noblemeans.diffraction
----------------------

Diffraction of the random Fibonacci (m = 1) point sets.

For a wavenumber ``k`` the exponential sum over the right endpoints of a
generation-n word is the random variable X_n(k). Its law follows the
concatenation process: with probability p_1 the word is X_{n-1} followed by
X_{n-2}, with probability p_0 the other way round, the two factors being
independent. With phases e_j = exp(-2 pi i k lambda^j):

    E_n = (p_1 + p_0 e_{n-2}) E_{n-1} + (p_0 + p_1 e_{n-1}) E_{n-2}
    V_n = V_{n-1} + V_{n-2} + 2 p_0 p_1 Psi_n
    Psi_n = 1/2 |(1 - e_{n-2}) E_{n-1} - (1 - e_{n-1}) E_{n-2}|^2

with E_0 = e_0, E_1 = e_1 and V_0 = V_1 = 0. The Bragg peaks sit on the
Fourier module Z[lambda]/sqrt(5) with amplitude lim |E_n|^2 / lambda^(2n),
and the absolutely continuous part has the density

    phi(k) = (2 p_0 p_1 lambda / sqrt(5)) sum_{i >= 2} lambda^(-i) Psi_i(k).

Phases are reduced modulo 1 with ``mpmath`` at ``PHASE_DPS`` digits, because
k lambda^j grows exponentially and double precision loses the phase.
"""

__all__ = [
    'FourierPoint',
    'MeanSequence',
    'VarianceSequence',
    'AcDensity',
    'PurePointAmplitude',
    'phases',
    'mean_recursion',
    'variance_sequence',
    'ac_density',
    'pp_amplitude',
    'ifs_pp',
    'fourier_module_points',
    'exponential_sum',
    'empirical_spectrum',
    'sample_x',
    'variance_oracle',
    'mean_by_enumeration',
    'psi_monotonicity',
    'spectrum_table'
]

import logging
import math

from functools import lru_cache
from typing import List, NamedTuple, Tuple

import mpmath
import numpy as np

from noblemeans.consts import (
    AC_DEFAULT_TRUNCATION,
    AC_TAIL_WINDOW,
    IFS_EPSILON,
    PHASE_DPS,
    PP_CAUCHY_TOLERANCE,
    PP_CAUCHY_WINDOW,
    PP_DEFAULT_N
)
from noblemeans.exact import word_distribution
from noblemeans.geometry import ControlPointSet, realize
from noblemeans.ring import RingElt, algebraic_conjugate, inflation_multiplier
from noblemeans.subst import Word
from noblemeans.validators import raise_for_invalid_length, raise_for_invalid_probs


LOGGER = logging.getLogger(__name__)

LAMBDA = inflation_multiplier(1)
XI = algebraic_conjugate(1)
SQRT5 = math.sqrt(5)

# (eta_a(0), eta_b(0)): eigenvector of [[1, 1], [1, 0]] for lambda, summing to the density.
ETA_ZERO = np.array([1 / SQRT5, (LAMBDA - 1) / SQRT5])


class FourierPoint(NamedTuple):
    """The element k = (p + q lambda)/sqrt(5) of the Fourier module, kept exactly."""

    p: int
    q: int

    @property
    def k(self) -> float:
        return RingElt(self.p, self.q, 1).value() / SQRT5

    @property
    def kappa(self) -> float:
        """The internal image (p + q lambda')/sqrt(5)."""

        return RingElt(self.p, self.q, 1).star() / SQRT5

    def k_mp(self):
        return RingElt(self.p, self.q, 1).value_mp() / mpmath.sqrt(5)


class MeanSequence(NamedTuple):
    k: float
    values: np.ndarray
    phases: np.ndarray


class VarianceSequence(NamedTuple):
    k: float
    second_moments: np.ndarray
    variances: np.ndarray
    phi: np.ndarray


class AcDensity(NamedTuple):
    kgrid: np.ndarray
    values: np.ndarray
    truncation: int
    tail_estimate: np.ndarray
    psi: np.ndarray


class PurePointAmplitude(NamedTuple):
    amplitude: float
    cauchy: float
    converged: bool


@lru_cache(maxsize=None)
def _lambda_powers(n: int) -> Tuple[RingElt, ...]:
    lam = RingElt.generator(1)

    return tuple(lam ** j for j in range(n + 1))


def phases(k, n: int) -> np.ndarray:
    """e_j = exp(-2 pi i k lambda^j) for j = 0..n.

    ``k`` is a float (taken as an exact binary number) or a ``FourierPoint``.
    """

    raise_for_invalid_length(n, name='n', minimum=0)

    fractions = np.empty(n + 1)

    with mpmath.workdps(PHASE_DPS):
        k_mp = k.k_mp() if isinstance(k, FourierPoint) else mpmath.mpf(k)

        for j, power in enumerate(_lambda_powers(n)):
            x = k_mp * power.value_mp()
            fractions[j] = float(x - mpmath.floor(x))

    return np.exp(-2j * np.pi * fractions)


def _phase_table(kgrid, n: int) -> np.ndarray:
    return np.array([phases(k, n) for k in kgrid]).reshape(len(kgrid), n + 1)


def _mean_table(e: np.ndarray, probs) -> np.ndarray:
    # Mean recursion on every row of a phase table at once.
    p0, p1 = probs
    values = np.empty_like(e)
    values[:, 0] = e[:, 0]
    values[:, 1] = e[:, 1]

    for n in range(2, e.shape[1]):
        values[:, n] = (p1 + p0 * e[:, n - 2]) * values[:, n - 1] + (p0 + p1 * e[:, n - 1]) * values[:, n - 2]

    return values


def _psi_table(e: np.ndarray, values: np.ndarray) -> np.ndarray:
    psi = np.zeros(e.shape)
    difference = (1 - e[:, :-2]) * values[:, 1:-1] - (1 - e[:, 1:-1]) * values[:, :-2]
    psi[:, 2:] = 0.5 * np.abs(difference) ** 2

    return psi


def _checked_probs(probs) -> Tuple[float, float]:
    raise_for_invalid_probs(probs, 1, strict=False)

    return float(probs[0]), float(probs[1])


def mean_recursion(k, n: int, probs=(0.5, 0.5)) -> MeanSequence:
    """E_0, ..., E_n of X_n(k)."""

    raise_for_invalid_length(n, name='n', minimum=2)
    probs = _checked_probs(probs)

    e = phases(k, n)[None, :]

    return MeanSequence(float(k.k if isinstance(k, FourierPoint) else k), _mean_table(e, probs)[0], e[0])


def variance_sequence(k, n: int, probs=(0.5, 0.5)) -> VarianceSequence:
    """Second moments, variances and phi_n = V_n / lambda^n of X_0(k), ..., X_n(k).

    The variance vanishes exactly when p_0 p_1 = 0 or k = 0.
    """

    raise_for_invalid_length(n, name='n', minimum=2)
    p0, p1 = _checked_probs(probs)

    e = phases(k, n)[None, :]
    values = _mean_table(e, (p0, p1))
    psi = _psi_table(e, values)[0]

    variances = np.zeros(n + 1)
    for j in range(2, n + 1):
        variances[j] = variances[j - 1] + variances[j - 2] + 2 * p0 * p1 * psi[j]

    second_moments = variances + np.abs(values[0]) ** 2
    phi = variances / LAMBDA ** np.arange(n + 1)

    return VarianceSequence(float(k.k if isinstance(k, FourierPoint) else k), second_moments, variances, phi)


def ac_density(kgrid, truncation: int = AC_DEFAULT_TRUNCATION, probs=(0.5, 0.5)) -> AcDensity:
    """The absolutely continuous density phi on ``kgrid``, truncated after ``truncation`` terms.

    The tail estimate bounds the neglected terms by the largest Psi_i of the
    last ``AC_TAIL_WINDOW`` indices times the geometric remainder.
    """

    raise_for_invalid_length(truncation, name='truncation', minimum=3)
    p0, p1 = _checked_probs(probs)

    kgrid = np.asarray(kgrid, dtype=float)
    e = _phase_table(kgrid, truncation)
    psi = _psi_table(e, _mean_table(e, (p0, p1)))

    prefactor = 2 * p0 * p1 * LAMBDA / SQRT5
    weights = LAMBDA ** -np.arange(truncation + 1, dtype=float)
    values = prefactor * psi @ weights

    window = psi[:, -AC_TAIL_WINDOW:].max(axis=1)
    tail = prefactor * window * LAMBDA ** -truncation / (LAMBDA - 1)

    return AcDensity(kgrid, values, truncation, tail, psi)


def pp_amplitude(k, n: int = PP_DEFAULT_N, probs=(0.5, 0.5),
                 tol: float = PP_CAUCHY_TOLERANCE) -> PurePointAmplitude:
    """The Bragg amplitude |E_n(k)|^2 / lambda^(2n) with a Cauchy convergence report.

    ``cauchy`` is the largest change over the last ``PP_CAUCHY_WINDOW`` values.
    """

    raise_for_invalid_length(n, name='n', minimum=PP_CAUCHY_WINDOW + 1)

    values = mean_recursion(k, n, probs).values
    j = np.arange(n + 1)
    amplitudes = np.abs(values) ** 2 / LAMBDA ** (2 * j)

    tail = amplitudes[-PP_CAUCHY_WINDOW - 1:]
    cauchy = float(np.max(np.abs(np.diff(tail))))
    converged = cauchy <= tol

    if not converged:
        LOGGER.warning('Bragg amplitude at k = %s did not settle: Cauchy difference %.3g.', k, cauchy)

    return PurePointAmplitude(float(amplitudes[-1]), cauchy, converged)


def ifs_pp(point: FourierPoint, probs=(0.5, 0.5), eps: float = IFS_EPSILON) -> float:
    """The Bragg amplitude at a Fourier-module point from the matrix product route.

    (eta_a, eta_b) = |xi|^n prod_{l=1..n} (p_0 A_l + p_1 B_l) (eta_a(0), eta_b(0))

    with A_l = [[e(kappa xi^(l-1)), 1], [1, 0]] and B_l = [[1, 1], [e(kappa xi^l), 0]],
    where kappa is the internal image of ``point`` and n the first step with
    |kappa xi^n| < ``eps``. The amplitude is |eta_a + eta_b|^2.
    """

    p0, p1 = _checked_probs(probs)
    kappa = point.kappa

    steps = 0
    while abs(kappa) * abs(XI) ** steps >= eps:
        steps += 1

    def e(x: float) -> complex:
        return complex(np.exp(-2j * np.pi * x))

    product = np.eye(2, dtype=complex)
    for ell in range(1, steps + 1):
        a = np.array([[e(kappa * XI ** (ell - 1)), 1], [1, 0]])
        b = np.array([[1, 1], [e(kappa * XI ** ell), 0]])
        product = product @ (p0 * a + p1 * b)

    eta = abs(XI) ** steps * product @ ETA_ZERO

    return float(abs(eta.sum()) ** 2)


def fourier_module_points(max_pq: int, kmax: float) -> List[FourierPoint]:
    """All (p + q lambda)/sqrt(5) with |p|, |q| <= ``max_pq`` and |k| <= ``kmax``, sorted by k."""

    raise_for_invalid_length(max_pq, name='max_pq', minimum=0)

    if kmax <= 0:
        raise ValueError(f'The value of kmax "{kmax}" is invalid. Enter a positive number.')

    points = [
        FourierPoint(p, q)
        for p in range(-max_pq, max_pq + 1)
        for q in range(-max_pq, max_pq + 1)
        if abs(FourierPoint(p, q).k) <= kmax
    ]

    return sorted(points, key=lambda point: point.k)


def _right_endpoints(ps: ControlPointSet) -> np.ndarray:
    lam = inflation_multiplier(ps.m)
    lengths = np.where(ps.letters == 0, lam, 1.0)

    return ps.physical + lengths


def exponential_sum(w: Word, k: float, endpoints: str = 'right') -> complex:
    """sum_x exp(-2 pi i k x) over the control points of the m = 1 realisation of ``w``.

    ``endpoints`` selects right (default, as in X_n) or left interval endpoints.
    """

    if endpoints not in ('left', 'right'):
        raise ValueError(f'The endpoints "{endpoints}" are invalid. Enter "left" or "right".')

    ps = realize(w, 1, origin_at=0)
    x = _right_endpoints(ps) if endpoints == 'right' else ps.physical

    return complex(np.sum(np.exp(-2j * np.pi * k * x)))


def empirical_spectrum(ps: ControlPointSet, kgrid, chunk: int = 256) -> List[dict]:
    """Rows ``k, intensity, bragg`` of a single realisation.

    ``intensity`` is |sum|^2 / L and ``bragg`` is |sum|^2 / L^2, where L is the
    physical length of the patch.
    """

    kgrid = np.asarray(kgrid, dtype=float)

    if len(ps) == 0:
        return [{'k': k, 'intensity': 0.0, 'bragg': 0.0} for k in kgrid.tolist()]

    x = ps.physical
    length = float(_right_endpoints(ps)[-1] - x[0])

    sums = np.empty(kgrid.size, dtype=complex)
    for start in range(0, kgrid.size, chunk):
        block = kgrid[start:start + chunk]
        sums[start:start + chunk] = np.exp(-2j * np.pi * np.outer(block, x)).sum(axis=1)

    power = np.abs(sums) ** 2

    return [
        {'k': k, 'intensity': i, 'bragg': b}
        for k, i, b in zip(kgrid.tolist(), (power / length).tolist(), (power / length ** 2).tolist())
    ]


def sample_x(n: int, k, probs=(0.5, 0.5), size: int = 1, rng: np.random.Generator = None) -> np.ndarray:
    """``size`` independent samples of X_n(k) drawn from the concatenation process."""

    raise_for_invalid_length(n, name='n', minimum=0)
    p0, p1 = _checked_probs(probs)

    if rng is None:
        rng = np.random.default_rng()

    e = phases(k, max(n, 1))

    def draw(j: int) -> np.ndarray:
        if j < 2:
            return np.full(size, e[j])

        longer = draw(j - 1)
        shorter = draw(j - 2)
        first = rng.random(size) < p1

        return np.where(first, longer + e[j - 1] * shorter, shorter + e[j - 2] * longer)

    return draw(n)


def variance_oracle(n: int, k, probs=(0.5, 0.5), size: int = 100000, rng: np.random.Generator = None) -> dict:
    """Monte-Carlo mean and variance of X_n(k) with the standard error of the variance."""

    samples = sample_x(n, k, probs, size, rng)
    mean = samples.mean()
    squared = np.abs(samples - mean) ** 2

    return {
        'mean': complex(mean),
        'variance': float(squared.mean()),
        'standard_error': float(squared.std(ddof=1) / math.sqrt(size))
    }


def mean_by_enumeration(n: int, k: float, probs=(0.5, 0.5)) -> complex:
    """E[X_n(k)] summed over every exact word of generation n + 1 with its probability."""

    raise_for_invalid_length(n, name='n', minimum=0)

    law = word_distribution(1, n + 1, probs)

    return sum(p * exponential_sum(Word.from_string(w), k) for w, p in law.items())


def psi_monotonicity(kgrid, truncation: int = AC_DEFAULT_TRUNCATION, probs=(0.5, 0.5), atol: float = 1e-12) -> dict:
    """Check on ``kgrid`` that Psi_i(k) does not increase with i (from i = 2 on).

    Violations are logged, not raised. Returns ``{checked, violations, worst}``.
    """

    psi = ac_density(kgrid, truncation, probs).psi[:, 2:]
    increase = np.diff(psi, axis=1)
    violations = int(np.count_nonzero(increase > atol))

    report = {
        'checked': int(increase.size),
        'violations': violations,
        'worst': float(increase.max()) if increase.size else 0.0
    }

    if violations:
        LOGGER.warning('Psi_i increased in i at %d of %d grid steps (largest increase %.3g).',
                       violations, report['checked'], report['worst'])

    return report


def spectrum_table(kgrid, probs=(0.5, 0.5), max_pq: int = 10, kmax: float = 3.0,
                   truncation: int = AC_DEFAULT_TRUNCATION, n: int = PP_DEFAULT_N,
                   patch: ControlPointSet = None) -> dict:
    """The spectrum document: absolutely continuous density, Bragg peaks and, optionally,
    the empirical spectrum of ``patch``.

    Returns ``{'probs', 'ac': [{k, phi}], 'pp': [{k, amplitude, ifs, p, q, converged}],
    'empirical': [{k, intensity, bragg}]}``.
    """

    kgrid = np.asarray(kgrid, dtype=float)
    density = ac_density(kgrid, truncation, probs)

    pp = []
    for point in fourier_module_points(max_pq, kmax):
        amplitude = pp_amplitude(point, n, probs)
        pp.append(
            {
                'k': point.k,
                'amplitude': amplitude.amplitude,
                'ifs': ifs_pp(point, probs),
                'p': point.p,
                'q': point.q,
                'converged': amplitude.converged
            }
        )

    table = {
        'probs': [float(p) for p in probs],
        'ac': [{'k': k, 'phi': phi} for k, phi in zip(kgrid.tolist(), density.values.tolist())],
        'pp': pp
    }

    if patch is not None:
        table['empirical'] = empirical_spectrum(patch, kgrid)

    return table
