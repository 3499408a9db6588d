"""
Unit tests for girth, acyclicity and topological order.
"""
import networkx as nx
from django.test import SimpleTestCase

from tournaments.digraph import (
    Digraph,
    GirthKind,
    cycle_digraph,
    empty_digraph,
    girth,
    is_acyclic,
    paley_tournament,
    topological_order,
)
from tournaments.exceptions import CyclicInput
from tournaments.search import random_digraph
from tests.utils.helpers import c4, chain, is_cycle_of, shortest_cycle_length, to_networkx


class TestGirth(SimpleTestCase):
    """Test the shortest-cycle computation and its canonical witness."""

    def test_four_cycle(self):
        """Test girth 4 with the whole cycle as witness."""
        result = girth(c4())
        self.assertEqual(result.kind, GirthKind.FINITE)
        self.assertEqual(result.length, 4)
        self.assertEqual(result.witness, (0, 1, 2, 3))

    def test_two_cycle(self):
        """Test a pair of opposite arcs gives girth 2."""
        result = girth(Digraph.from_arcs(2, [(0, 1), (1, 0)]))
        self.assertEqual(result.length, 2)
        self.assertEqual(result.witness, (0, 1))

    def test_chain_is_infinite(self):
        """Test an acyclic chain has infinite girth."""
        result = girth(chain(3))
        self.assertEqual(result.kind, GirthKind.INFINITE)
        self.assertIsNone(result.length)
        self.assertEqual(result.witness, ())

    def test_paley_seven_witness_is_lexicographically_least(self):
        """Test the Paley tournament reports the lexicographically least triangle."""
        result = girth(paley_tournament(7))
        self.assertEqual(result.length, 3)
        self.assertEqual(result.witness, (0, 1, 3))

    def test_witness_starts_at_smallest_vertex(self):
        """Test the witness cycle is rotated to start at its smallest vertex."""
        # Only cycle: 2 -> 4 -> 3 -> 2, plus an acyclic tail into it.
        digraph = Digraph.from_arcs(5, [(0, 2), (2, 4), (4, 3), (3, 2), (1, 0)])
        self.assertEqual(girth(digraph).witness, (2, 4, 3))

    def test_shortest_of_several_cycles(self):
        """Test the shortest cycle wins when several cycles exist."""
        digraph = Digraph.from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 3)])
        result = girth(digraph)
        self.assertEqual(result.length, 3)
        self.assertEqual(result.witness, (3, 4, 5))

    def test_at_least(self):
        """Test the girth-at-least check for finite and infinite girth."""
        self.assertTrue(girth(c4()).at_least(4))
        self.assertFalse(girth(c4()).at_least(5))
        self.assertTrue(girth(chain(4)).at_least(100))

    def test_agrees_with_networkx_bfs(self):
        """Length and witness validity against an independent BFS on random digraphs."""
        for seed in range(150):
            n = 3 + seed % 8
            digraph = random_digraph(n, 0.15 + (seed % 5) * 0.08, seed)
            result = girth(digraph)
            expected = shortest_cycle_length(digraph)
            if expected is None:
                self.assertFalse(result.is_finite, seed)
                continue
            self.assertEqual(result.length, expected, seed)
            self.assertEqual(len(result.witness), expected)
            self.assertTrue(is_cycle_of(digraph, result.witness), seed)
            self.assertEqual(result.witness[0], min(result.witness))


class TestAcyclicity(SimpleTestCase):
    """Test is_acyclic and topological_order."""

    def test_examples(self):
        """Test is_acyclic on a chain, a cycle and an empty graph."""
        self.assertTrue(is_acyclic(chain(3)))
        self.assertFalse(is_acyclic(c4()))
        self.assertTrue(is_acyclic(empty_digraph(5)))

    def test_topological_order_prefers_small_vertices(self):
        """Test the topological order takes the smallest available vertex first."""
        digraph = Digraph.from_arcs(4, [(3, 1), (2, 0)])
        self.assertEqual(topological_order(digraph), [2, 0, 3, 1])

    def test_topological_order_rejects_cycles(self):
        """Test topological order raises on a cyclic digraph."""
        with self.assertRaises(CyclicInput):
            topological_order(cycle_digraph(3))

    def test_agrees_with_girth_and_networkx(self):
        """Test acyclicity agrees with infinite girth and with networkx."""
        for seed in range(200):
            digraph = random_digraph(2 + seed % 9, 0.2, seed)
            acyclic = is_acyclic(digraph)
            self.assertEqual(acyclic, girth(digraph).kind is GirthKind.INFINITE, seed)
            self.assertEqual(acyclic, nx.is_directed_acyclic_graph(to_networkx(digraph)), seed)
