# -*- coding: utf-8 -*-
"""Tests of noblemeans.subst module."""

import unittest

import numpy as np

from noblemeans.errors import SizeLimitError
from noblemeans.subst import Word
from noblemeans.subst import NmsRule
from noblemeans.subst import RandomSubst
from noblemeans.subst import substitution_matrix
from noblemeans.subst import letter_counts
from noblemeans.subst import apply_nms
from noblemeans.subst import apply_random
from noblemeans.subst import iterate_random
from noblemeans.subst import deterministic_iterate
from noblemeans.subst import realisations
from noblemeans.subst import legal_words
from noblemeans.subst import supported_legal_words
from noblemeans.subst import scan_legal_words
from noblemeans.subst import window_images
from noblemeans.subst import complexity
from noblemeans.subst import hull_seed
from noblemeans.subst import hull_sample

from tests.fixtures import EXACT_LENGTHS
from tests.fixtures import EXACT_WORDS_M1
from tests.fixtures import FIBONACCI_LENGTHS
from tests.fixtures import LEGAL_WORDS_M1
from tests.fixtures import LEGAL_WORDS_FIBONACCI


class TestWord(unittest.TestCase):
    """Test Class of noblemeans.subst.Word."""

    def test_if_from_string_reads_the_origin_marker(self):
        w = Word.from_string('ab|ba')

        self.assertEqual(str(w), 'abba')
        self.assertEqual(w.origin, 2)
        self.assertEqual(w.to_string(bar=True), 'ab|ba')
        self.assertEqual(repr(w), "Word('ab|ba')")
        self.assertEqual(Word.from_string('abba').origin, 0)

    def test_if_invalid_words_raise_value_error(self):
        for text in ('abc', 'a|b|a', 'AB'):
            with self.assertRaises(ValueError):
                Word.from_string(text)

        with self.assertRaises(ValueError) as context:
            Word(np.array([0, 2, 1]))

        self.assertIn('Only the letters "a" and "b"', str(context.exception))

        with self.assertRaises(ValueError):
            Word(np.array([0, 1]), origin=3)

    def test_if_words_compare_by_letters_and_origin(self):
        self.assertEqual(Word.from_string('a|a'), Word.from_string('a|a'))
        self.assertNotEqual(Word.from_string('a|a'), Word.from_string('aa'))
        self.assertEqual(len({Word.from_string('ab'), Word.from_string('ab')}), 1)

    def test_if_letter_counts_and_window_are_correct(self):
        w = Word.from_string('aabab')

        self.assertEqual(w.count_a, 3)
        self.assertEqual(w.count_b, 2)
        self.assertListEqual(letter_counts(w).tolist(), [3, 2])
        self.assertEqual(w.window(1, 3), 'aba')


class TestSubst(unittest.TestCase):
    """Test Class of noblemeans.subst module."""

    def test_if_rule_images_are_correct(self):
        self.assertEqual(NmsRule(m=1, i=0).image('a'), 'ba')
        self.assertEqual(NmsRule(m=1, i=1).image('a'), 'ab')
        self.assertEqual(NmsRule(m=3, i=1).image('a'), 'abaa')
        self.assertEqual(NmsRule(m=3, i=1).image('b'), 'a')
        self.assertListEqual(substitution_matrix(2).tolist(), [[2, 1], [1, 0]])

    def test_if_apply_nms_substitutes_letterwise(self):
        self.assertEqual(str(apply_nms(NmsRule(m=2, i=1), Word.from_string('ab'))), 'abaa')
        self.assertEqual(str(apply_nms(NmsRule(m=1, i=1), Word.from_string('aab'))), 'ababa')

        with self.assertRaises(ValueError):
            apply_nms(NmsRule(m=2, i=3), Word.from_string('a'))

    def test_if_apply_nms_carries_the_origin(self):
        w = apply_nms(NmsRule(m=1, i=1), Word.from_string('a|a'))

        self.assertEqual(w.to_string(bar=True), 'ab|ab')

        w = apply_nms(NmsRule(m=2, i=0), Word.from_string('ab|ba'))

        self.assertEqual(w.to_string(bar=True), 'baaa|abaa')

    def test_if_substitution_matrix_maps_letter_counts(self):
        rs = RandomSubst(m=3, seed=5)
        w = Word.from_string('abaab')

        for _ in range(4):
            image = apply_random(rs, w)

            self.assertListEqual(letter_counts(image).tolist(), (substitution_matrix(3) @ letter_counts(w)).tolist())
            w = image

    def test_if_iterated_lengths_follow_the_length_recursion(self):
        for m, lengths in EXACT_LENGTHS.items():
            rs = RandomSubst(m=m, seed=1)

            for k, length in enumerate(lengths):
                self.assertEqual(len(iterate_random(rs, Word.from_string('b'), k)), length)

    def test_if_twenty_steps_of_random_fibonacci_have_10946_letters(self):
        w = iterate_random(RandomSubst(m=1, probs=(0.5, 0.5), seed=7), Word.from_string('b'), k=20)

        self.assertEqual(len(w), FIBONACCI_LENGTHS[20])
        self.assertEqual(w.count_a, 6765)
        self.assertEqual(w.count_b, 4181)

    def test_if_same_seed_gives_same_realisation(self):
        first = iterate_random(RandomSubst(m=2, seed=42), Word.from_string('b'), 10)
        second = iterate_random(RandomSubst(m=2, seed=42), Word.from_string('b'), 10)
        third = iterate_random(RandomSubst(m=2, seed=43), Word.from_string('b'), 10)

        self.assertEqual(first, second)
        self.assertNotEqual(first, third)

    def test_if_spawned_generators_are_independent(self):
        children = RandomSubst(m=1, seed=3).spawn(2)
        words = [iterate_random(child, Word.from_string('b'), 15) for child in children]

        self.assertEqual(len(children), 2)
        self.assertNotEqual(words[0], words[1])

    def test_if_degenerate_probabilities_reproduce_the_deterministic_rule(self):
        for i in (0, 1):
            probs = (1.0, 0.0) if i == 0 else (0.0, 1.0)
            rs = RandomSubst(m=1, probs=probs, seed=9)

            self.assertEqual(rs.support, (i,))
            self.assertEqual(
                iterate_random(rs, Word.from_string('b'), 12),
                deterministic_iterate(NmsRule(1, i), 12)
            )

    def test_if_invalid_probabilities_raise_value_error(self):
        with self.assertRaises(ValueError):
            RandomSubst(m=1, probs=(0.3, 0.3))

        with self.assertRaises(ValueError):
            RandomSubst(m=2, probs=(0.5, 0.5))

        with self.assertRaises(ValueError):
            RandomSubst(m=1, probs=(1.5, -0.5))

    def test_if_realisations_are_the_exact_words(self):
        for n, words in EXACT_WORDS_M1.items():
            self.assertSetEqual(set(realisations(1, 'b', n - 1)), words)

        self.assertSetEqual(set(realisations(1, 'a', 1)), {'ab', 'ba'})
        self.assertSetEqual(set(realisations(1, 'a', 1, branches=[1])), {'ab'})

    def test_if_realisations_respect_the_size_limit(self):
        with self.assertRaises(SizeLimitError):
            realisations(1, 'b', 8, limit=10)

    def test_if_legal_words_match_known_sets(self):
        rs = RandomSubst(m=1)

        for ell, words in LEGAL_WORDS_M1.items():
            self.assertSetEqual(set(legal_words(rs, ell)), words)

        self.assertIn('bb', legal_words(rs, 2))
        self.assertNotIn('bbb', legal_words(rs, 3))
        self.assertEqual(complexity(rs, 3), 7)

        with self.assertRaises(ValueError):
            complexity(rs, 21)

    def test_if_legal_words_agree_with_a_brute_force_scan(self):
        rs = RandomSubst(m=1)

        self.assertSetEqual(set(legal_words(rs, 3)), set(scan_legal_words(1, 3, 6)))

        for m, ell, k_max in ((1, 4, 7), (2, 3, 4)):
            scanned = scan_legal_words(m, ell, k_max)

            self.assertTrue(scanned <= legal_words(RandomSubst(m=m), ell).words)

    def test_if_closure_equals_the_scan_for_m_equal_2(self):
        rs = RandomSubst(m=2)

        self.assertSetEqual(set(legal_words(rs, 2)), {'aa', 'ab', 'ba', 'bb'})

        for ell in (2, 3):
            self.assertSetEqual(set(legal_words(rs, ell)), set(scan_legal_words(2, ell, 4)))

    def test_if_legal_words_do_not_depend_on_the_probabilities(self):
        uniform = legal_words(RandomSubst(m=2), 4)
        skewed = legal_words(RandomSubst(m=2, probs=(0.1, 0.1, 0.8)), 4)

        self.assertSetEqual(set(uniform), set(skewed))

    def test_if_supported_legal_words_restrict_to_the_support(self):
        rs = RandomSubst(m=1, probs=(0.0, 1.0))

        for ell, words in LEGAL_WORDS_FIBONACCI.items():
            self.assertSetEqual(set(supported_legal_words(rs, ell)), words)
            self.assertSetEqual(set(supported_legal_words(rs, ell)), set(scan_legal_words(1, ell, 8, branches=[1])))

    def test_if_window_images_start_in_the_first_image(self):
        pairs = list(window_images('ab', 1, (0, 1)))

        self.assertEqual(len(pairs), 2)
        self.assertListEqual([windows for _, windows in pairs], [['ba', 'aa'], ['ab', 'ba']])

        pairs = list(window_images('ba', 1, (0, 1)))

        self.assertListEqual([windows for _, windows in pairs], [['ab'], ['aa']])

    def test_if_hull_sample_covers_both_sides_of_the_origin(self):
        rs = RandomSubst(m=2, seed=4)

        self.assertEqual(hull_seed(rs).to_string(bar=True), 'a|a')

        w = hull_sample(rs, 50)

        self.assertGreaterEqual(w.origin, 50)
        self.assertGreaterEqual(len(w) - w.origin, 50)


if __name__ == '__main__':
    unittest.main()
