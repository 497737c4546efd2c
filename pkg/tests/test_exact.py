# -*- coding: utf-8 -*-
"""Tests of noblemeans.exact module."""

import unittest

from noblemeans.errors import SizeLimitError
from noblemeans.exact import exact_length
from noblemeans.exact import exact_words
from noblemeans.exact import exact_record
from noblemeans.exact import process_equality_check
from noblemeans.exact import word_distribution
from noblemeans.exact import substitution_distribution
from noblemeans.exact import process_distribution_check
from noblemeans.exact import entropy_series
from noblemeans.exact import entropy_table
from noblemeans.exact import entropy_empirical

from tests.fixtures import EXACT_LENGTHS
from tests.fixtures import EXACT_WORDS_M1
from tests.fixtures import EXACT_COUNTS_M1
from tests.fixtures import EXACT_WORDS_M2
from tests.fixtures import ENTROPY_TABLE
from tests.fixtures import EMPIRICAL_ENTROPY_M1


class TestExact(unittest.TestCase):
    """Test Class of noblemeans.exact module."""

    def test_if_exact_length_follows_the_recursion(self):
        for m, lengths in EXACT_LENGTHS.items():
            self.assertListEqual([exact_length(m, n) for n in range(1, len(lengths) + 1)], lengths)

        with self.assertRaises(ValueError):
            exact_length(1, 0)

    def test_if_exact_words_match_known_sets(self):
        for n, words in EXACT_WORDS_M1.items():
            result = exact_words(1, n)

            self.assertSetEqual(set(result.words), words)
            self.assertEqual(result.length, exact_length(1, n))

        for n, count in EXACT_COUNTS_M1.items():
            self.assertEqual(exact_words(1, n).count, count)

        for n, words in EXACT_WORDS_M2.items():
            self.assertSetEqual(set(exact_words(2, n).words), words)

    def test_if_every_exact_word_has_the_generation_length(self):
        result = exact_words(2, 5)

        self.assertTrue(all(len(word) == result.length for word in result.words))

    def test_if_exact_words_raise_size_limit_error(self):
        with self.assertRaises(SizeLimitError) as context:
            exact_words(1, 12, limit=100)

        self.assertGreater(context.exception.lower_bound, context.exception.limit)

        # SizeLimitError is a ValueError for generic callers.
        with self.assertRaises(ValueError):
            exact_words(3, 8, limit=50)

    def test_if_concatenation_equals_substitution(self):
        for m, n in ((1, 6), (1, 7), (2, 5), (3, 4)):
            self.assertTrue(process_equality_check(m, n))

    def test_if_word_distribution_is_a_probability_law(self):
        law = word_distribution(1, 6, (0.3, 0.7))

        self.assertAlmostEqual(sum(law.values()), 1.0, places=12)
        self.assertSetEqual(set(law), set(exact_words(1, 6).words))

    def test_if_concatenation_and_substitution_have_the_same_law(self):
        self.assertTrue(process_distribution_check(1, 6, (0.3, 0.7)))
        self.assertTrue(process_distribution_check(2, 5, (0.2, 0.5, 0.3)))

    def test_if_substitution_distribution_of_one_step_is_the_branch_law(self):
        law = substitution_distribution(1, 'a', 1, (0.25, 0.75))

        self.assertAlmostEqual(law['ba'], 0.25)
        self.assertAlmostEqual(law['ab'], 0.75)

    def test_if_entropy_series_matches_the_table(self):
        for m, expected in ENTROPY_TABLE.items():
            result = entropy_series(m)

            self.assertAlmostEqual(result.value, expected, delta=1e-5)
            self.assertGreater(result.tail_bound, 0)
            self.assertLess(result.tail_bound, 1e-8)

    def test_if_tail_bound_covers_the_truncation_error(self):
        exact = entropy_series(2, truncation=200).value

        for truncation in (10, 20, 40):
            result = entropy_series(2, truncation)

            self.assertLessEqual(exact - result.value, result.tail_bound)
            self.assertGreaterEqual(exact - result.value, 0)

    def test_if_entropy_decreases_with_m(self):
        values = [row['value'] for row in entropy_table(ms=range(1, 11))]

        for larger, smaller in zip(values, values[1:]):
            self.assertGreater(larger, smaller)

        self.assertLess(values[-1], values[0] / 2)
        self.assertCountEqual(['m', 'value', 'tail_bound', 'truncation'], entropy_table(ms=(1,))[0].keys())

    def test_if_empirical_entropy_matches_small_generations(self):
        for n, expected in EMPIRICAL_ENTROPY_M1.items():
            self.assertAlmostEqual(entropy_empirical(1, n), expected, places=4)

    def test_if_empirical_entropy_increases_towards_the_series(self):
        values = [entropy_empirical(1, n) for n in range(3, 9)]

        for smaller, larger in zip(values, values[1:]):
            self.assertGreater(larger, smaller)

        self.assertLess(abs(values[-1] - ENTROPY_TABLE[1]), 0.25 * ENTROPY_TABLE[1])

    def test_if_exact_record_omits_long_word_lists(self):
        record = exact_record(exact_words(1, 4))

        self.assertEqual(record['count'], 3)
        self.assertListEqual(record['words'], ['aab', 'aba', 'baa'])
        self.assertNotIn('words', exact_record(exact_words(1, 7), max_words=5))


if __name__ == '__main__':
    unittest.main()
