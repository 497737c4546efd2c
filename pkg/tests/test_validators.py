# -*- coding: utf-8 -*-
"""Tests of noblemeans.validators module."""

import unittest

import numpy as np

from noblemeans.errors import SizeLimitError
from noblemeans.validators import raise_for_invalid_m
from noblemeans.validators import raise_for_invalid_branch
from noblemeans.validators import raise_for_invalid_probs
from noblemeans.validators import raise_for_invalid_letters
from noblemeans.validators import raise_for_invalid_length
from noblemeans.validators import raise_for_invalid_positive
from noblemeans.validators import raise_for_size_limit
from noblemeans.validators import is_valid_word


class TestValidators(unittest.TestCase):
    """Test Class of noblemeans.validators module."""

    def test_raise_for_invalid_m(self):
        raise_for_invalid_m(1)
        raise_for_invalid_m(np.int64(7))

        for m in (0, -2, 2.0, True, None):
            with self.assertRaises(ValueError):
                raise_for_invalid_m(m)

    def test_raise_for_invalid_branch(self):
        raise_for_invalid_branch(0, 3)
        raise_for_invalid_branch(3, 3)

        for i in (-1, 4, 1.0):
            with self.assertRaises(ValueError):
                raise_for_invalid_branch(i, 3)

    def test_raise_for_invalid_probs(self):
        raise_for_invalid_probs((0.25, 0.75), 1)
        raise_for_invalid_probs((0.0, 1.0), 1, strict=False)

        invalid_cases = [
            ((0.0, 1.0), 1),
            ((0.5, 0.5), 2),
            ((0.6, 0.6), 1),
            (('a', 'b'), 1),
            ((float('nan'), 0.5), 1),
        ]

        for probs, m in invalid_cases:
            with self.assertRaises(ValueError):
                raise_for_invalid_probs(probs, m)

        with self.assertRaises(ValueError):
            raise_for_invalid_probs((-0.5, 1.5), 1, strict=False)

    def test_if_probability_message_names_the_range(self):
        with self.assertRaises(ValueError) as context:
            raise_for_invalid_probs((0.2, 0.3, 0.5), 1)

        self.assertIn('exactly 2 entries', str(context.exception))

    def test_is_valid_word(self):
        self.assertTrue(is_valid_word('abba'))
        self.assertTrue(is_valid_word(''))
        self.assertFalse(is_valid_word('abc'))
        self.assertFalse(is_valid_word(None))

    def test_raise_for_invalid_letters(self):
        raise_for_invalid_letters(np.array([0, 1, 1], dtype=np.uint8))
        raise_for_invalid_letters(np.array([], dtype=np.uint8))

        with self.assertRaises(ValueError):
            raise_for_invalid_letters(np.array([0, 2], dtype=np.uint8))

    def test_raise_for_invalid_length(self):
        raise_for_invalid_length(1)
        raise_for_invalid_length(0, minimum=0)
        raise_for_invalid_length(20, maximum=20)

        for value, kwargs in ((0, {}), (21, {'maximum': 20}), (2.5, {}), (False, {'minimum': 0})):
            with self.assertRaises(ValueError):
                raise_for_invalid_length(value, **kwargs)

    def test_raise_for_invalid_positive(self):
        raise_for_invalid_positive(0.001, 'kstep')
        raise_for_invalid_positive(3, 'kmax')
        raise_for_invalid_positive(np.float64(1.5), 'kmax')

        for value in (0, 0.0, -1, float('nan'), float('inf'), True, '1', None):
            with self.assertRaises(ValueError):
                raise_for_invalid_positive(value, 'kstep')

        with self.assertRaises(ValueError) as context:
            raise_for_invalid_positive(-2.0, 'kmax')

        self.assertIn('kmax', str(context.exception))

    def test_raise_for_size_limit(self):
        raise_for_size_limit(10, 10, 'words')

        with self.assertRaises(SizeLimitError) as context:
            raise_for_size_limit(11, 10, 'words')

        self.assertEqual(context.exception.lower_bound, 11)
        self.assertEqual(context.exception.limit, 10)
        self.assertIn('words', str(context.exception))


if __name__ == '__main__':
    unittest.main()
