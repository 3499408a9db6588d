"""
Unit tests for colex ranking of subsets and triples.
"""
from itertools import combinations
from math import comb

from django.test import SimpleTestCase

from tournaments.combinatorics import bits, colex_rank, colex_subsets, colex_unrank, next_colex, to_mask
from tournaments.exceptions import InvalidTriple
from tournaments.tournament import triple_rank, triple_table, triple_unrank
from tests.utils.helpers import colex_key


class TestColex(SimpleTestCase):
    """Test colex rank, unrank and iteration."""

    def test_subsets_come_in_colex_order(self):
        """Test k-subsets are produced in colex order."""
        for n, k in ((6, 2), (7, 3), (6, 4)):
            expected = sorted(combinations(range(n), k), key=colex_key)
            self.assertEqual(list(colex_subsets(n, k)), expected)

    def test_rank_is_position(self):
        """Test a subset's rank is its position in the colex stream."""
        for rank, subset in enumerate(colex_subsets(8, 3)):
            self.assertEqual(colex_rank(subset), rank)
            self.assertEqual(colex_unrank(rank, 3), subset)

    def test_ranges(self):
        """Test rank ranges select the matching slice of the stream."""
        everything = list(colex_subsets(9, 4))
        self.assertEqual(list(colex_subsets(9, 4, 17, 40)), everything[17:40])
        self.assertEqual(list(colex_subsets(9, 4, 120, 500)), everything[120:])
        self.assertEqual(list(colex_subsets(9, 4, 200, 100)), [])

    def test_next_colex_stops_at_last(self):
        """Test the successor of the last subset is None."""
        subset = [2, 3]
        self.assertFalse(next_colex(subset, 4))
        subset = [0, 3]
        self.assertTrue(next_colex(subset, 4))
        self.assertEqual(subset, [1, 3])

    def test_bits(self):
        """Test conversion between bitmasks and vertex lists."""
        self.assertEqual(list(bits(0b101100)), [2, 3, 5])
        self.assertEqual(to_mask([5, 2, 3]), 0b101100)
        self.assertEqual(list(bits(0)), [])


class TestTripleRank(SimpleTestCase):
    """Test the triple bijection used to index tails."""

    def test_first_ranks(self):
        """Test the first triples get ranks 0, 1, 2 and 3."""
        self.assertEqual(triple_rank(0, 1, 2), 0)
        self.assertEqual(triple_rank(0, 1, 3), 1)
        self.assertEqual(triple_rank(0, 2, 3), 2)
        self.assertEqual(triple_rank(1, 2, 3), 3)

    def test_round_trip_up_to_ten(self):
        """Test unrank inverts rank for every triple up to ten vertices."""
        for n in range(3, 11):
            for a, b, c in combinations(range(n), 3):
                self.assertEqual(triple_unrank(triple_rank(a, b, c), n), (a, b, c))

    def test_unsorted_rejected(self):
        """Test unsorted or out-of-range triples are rejected."""
        with self.assertRaises(InvalidTriple):
            triple_rank(1, 0, 2)
        with self.assertRaises(InvalidTriple):
            triple_rank(-1, 0, 2)

    def test_unrank_out_of_range(self):
        """Test ranks outside 0..C(n,3)-1 are rejected."""
        with self.assertRaises(InvalidTriple):
            triple_unrank(comb(5, 3), 5)

    def test_table_matches_rank(self):
        """Test the triple table row order matches triple_rank."""
        table = triple_table(7)
        self.assertEqual(table.shape, (35, 3))
        for rank, (a, b, c) in enumerate(table.tolist()):
            self.assertEqual(triple_rank(a, b, c), rank)
