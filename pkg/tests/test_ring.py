# -*- coding: utf-8 -*-
"""Tests of noblemeans.ring module."""

import math
import unittest

import numpy as np

from noblemeans.errors import FamilyMismatchError
from noblemeans.ring import RingElt
from noblemeans.ring import LatticePoint
from noblemeans.ring import inflation_multiplier
from noblemeans.ring import algebraic_conjugate
from noblemeans.ring import add
from noblemeans.ring import mul
from noblemeans.ring import star_sign
from noblemeans.ring import star_signs

from tests.fixtures import GOLDEN_MEAN


class TestRing(unittest.TestCase):
    """Test Class of noblemeans.ring module."""

    def test_if_inflation_multiplier_is_the_golden_mean_for_m_equal_1(self):
        self.assertAlmostEqual(inflation_multiplier(1), GOLDEN_MEAN, places=12)
        self.assertAlmostEqual(inflation_multiplier(2), 1 + math.sqrt(2), places=12)

    def test_if_conjugate_satisfies_product_and_sum_relations(self):
        for m in range(1, 8):
            lam = inflation_multiplier(m)
            conj = algebraic_conjugate(m)

            self.assertAlmostEqual(lam * conj, -1.0, places=12)
            self.assertAlmostEqual(lam + conj, m, places=12)
            self.assertTrue(-1 < conj < 0)

    def test_if_invalid_m_raises_value_error(self):
        for m in (0, -1, 1.5, True, '1'):
            with self.assertRaises(ValueError):
                RingElt(0, 1, m)

    def test_if_generator_squares_to_m_lambda_plus_1(self):
        for m in (1, 2, 5):
            lam = RingElt.generator(m)

            self.assertEqual(lam ** 2, RingElt(1, m, m))
            self.assertEqual(lam * lam, m * lam + 1)

    def test_if_arithmetic_matches_float_values(self):
        x = RingElt(3, -2, 2)
        y = RingElt(-1, 5, 2)

        self.assertAlmostEqual((x + y).value(), x.value() + y.value(), places=9)
        self.assertAlmostEqual((x * y).value(), x.value() * y.value(), places=9)
        self.assertAlmostEqual((x * y).star(), x.star() * y.star(), places=9)
        self.assertAlmostEqual((x - y).star(), x.star() - y.star(), places=9)
        self.assertEqual(x - x, RingElt.from_int(0, 2))
        self.assertEqual(2 - x, RingElt(-1, 2, 2))

    def test_if_units_have_exact_inverses(self):
        lam = RingElt.generator(1)

        self.assertEqual(lam.norm, -1)
        self.assertEqual(lam.inverse(), RingElt(-1, 1, 1))
        self.assertEqual(lam * lam.inverse(), RingElt.from_int(1, 1))
        self.assertEqual(lam ** -3 * lam ** 3, RingElt.from_int(1, 1))

        with self.assertRaises(ZeroDivisionError):
            RingElt(2, 0, 1).inverse()

    def test_if_mixing_families_raises_family_mismatch_error(self):
        with self.assertRaises(FamilyMismatchError):
            RingElt(0, 1, 1) + RingElt(0, 1, 2)

        with self.assertRaises(FamilyMismatchError):
            add(RingElt(0, 1, 1), RingElt(0, 1, 3))

        with self.assertRaises(FamilyMismatchError):
            mul(RingElt(0, 1, 1), RingElt(0, 1, 3))

        # Still a ValueError for generic callers.
        with self.assertRaises(ValueError):
            RingElt(1, 1, 1) * RingElt(1, 1, 4)

    def test_if_equal_elements_hash_equal(self):
        self.assertEqual(len({RingElt(1, 2, 3), RingElt(1, 2, 3), RingElt(1, 2, 1)}), 2)
        self.assertEqual(repr(RingElt(1, -2, 3)), 'RingElt(p=1, q=-2, m=3)')

    def test_if_star_sign_is_exact_near_zero(self):
        # star(lambda^n) = lambda'^n, tiny for large n.
        for n in range(2, 60):
            x = RingElt.generator(1) ** n
            expected = 1 if n % 2 == 0 else -1

            self.assertEqual(star_sign(x), expected)

        self.assertEqual(star_sign(RingElt(0, 0, 1)), 0)

    def test_if_star_signs_agrees_with_the_scalar_sign(self):
        grid = np.arange(-12, 13)
        p, q = (values.ravel() for values in np.meshgrid(grid, grid, indexing='ij'))

        for m in (1, 2, 3):
            signs = star_signs(p, q, m)
            expected = [star_sign(RingElt(a, b, m)) for a, b in zip(p.tolist(), q.tolist())]

            self.assertEqual(signs.dtype, np.int8)
            self.assertListEqual(signs.tolist(), expected)

    def test_if_star_signs_handles_large_coefficients(self):
        p = np.array([10 ** 12, -(10 ** 12), 832040])
        q = np.array([0, 1, -1346269])

        self.assertListEqual(star_signs(p, q, 1).tolist(), [1, -1, 1])

    def test_if_lattice_point_keeps_both_coordinates(self):
        point = LatticePoint.from_ring(RingElt(1, 1, 1))

        self.assertAlmostEqual(point.physical, GOLDEN_MEAN + 1, places=12)
        self.assertAlmostEqual(point.internal, 1 - 1 / GOLDEN_MEAN, places=12)
        self.assertEqual(point.source, RingElt(1, 1, 1))


if __name__ == '__main__':
    unittest.main()
