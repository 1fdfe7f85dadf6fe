from itertools import product

from django.test import SimpleTestCase

from braid3.braid_words import Generator, cyclic_reduce, free_reduce
from braid3.enumeration import check_enumeration, enumerate_words

LETTERS = [(Generator.A1, 1), (Generator.A1, -1), (Generator.A2, 1), (Generator.A2, -1)]


def brute_force_classes(max_degree):
    """Rotation classes of cyclically reduced words, from every letter sequence."""
    found = set()
    for length in range(1, max_degree + 1):
        for letters in product(LETTERS, repeat=length):
            cw = cyclic_reduce(free_reduce(letters))
            if not cw.is_empty:
                found.add(cw)
    return found


class EnumerateWordsTests(SimpleTestCase):
    def test_small_counts(self):
        self.assertEqual(len(list(enumerate_words(1))), 4)
        self.assertEqual(len(list(enumerate_words(2))), 12)

    def test_matches_brute_force(self):
        for max_degree in (1, 2, 3, 4):
            self.assertEqual(set(enumerate_words(max_degree)), brute_force_classes(max_degree), max_degree)

    def test_sorted_by_degree(self):
        degrees = [cw.total_degree for cw in enumerate_words(5)]
        self.assertEqual(degrees, sorted(degrees))
        words = list(enumerate_words(5))
        self.assertEqual(len(words), len(set(words)))

    def test_rejects_zero(self):
        with self.assertRaises(ValueError):
            list(enumerate_words(0))


class CheckEnumerationTests(SimpleTestCase):
    def test_sandwich_holds(self):
        summary = check_enumeration(6)
        self.assertEqual(summary.failures, 0)
        self.assertTrue(summary.passed)
        self.assertEqual(summary.checked, len(list(enumerate_words(6))))
        self.assertEqual(summary.max_degree, 6)

    def test_workers_give_the_same_result(self):
        self.assertEqual(check_enumeration(5, workers=2), check_enumeration(5))
