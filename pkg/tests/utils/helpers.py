"""
Shared fixtures and brute-force oracles for the tournaments test suite.

The oracles enumerate paths, subsets and cycles directly or through networkx;
none of them calls the algorithm it checks.
"""
from itertools import combinations, permutations

import networkx as nx

from tournaments.digraph import Digraph, cycle_digraph, paley_tournament
from tournaments.search import random_digraph
from tournaments.tournament import Tournament3, tail, triple_table


def c4():
    return cycle_digraph(4)


def c5():
    return cycle_digraph(5)


def paley7():
    return paley_tournament(7)


def chain(n):
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def to_networkx(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(digraph.n))
    graph.add_edges_from(digraph.arcs())
    return graph


def shortest_cycle_length(digraph):
    """Shortest cycle through networkx BFS: 1 + dist(v, u) over every arc u -> v; None if acyclic."""
    graph = to_networkx(digraph)
    lengths = [
        nx.shortest_path_length(graph, v, u) + 1
        for u, v in graph.edges
        if nx.has_path(graph, v, u)
    ]
    return min(lengths) if lengths else None


def all_cycles(digraph):
    return [tuple(cycle) for cycle in nx.simple_cycles(to_networkx(digraph))]


def is_cycle_of(digraph, sequence):
    return all(
        digraph.has_arc(sequence[i], sequence[(i + 1) % len(sequence)])
        for i in range(len(sequence))
    ) and len(set(sequence)) == len(sequence)


def all_directed_paths(digraph):
    """Every simple directed path, as vertex tuples, including single vertices."""
    paths = []

    def extend(path):
        paths.append(tuple(path))
        for w in digraph.out_neighbors(path[-1]):
            if w not in path:
                extend(path + [w])

    for v in range(digraph.n):
        extend([v])
    return paths


def path_starts_oracle(digraph):
    paths = all_directed_paths(digraph)
    longest = max(len(path) for path in paths)
    return sorted({path[0] for path in paths if len(path) == longest})


def brute_force_domination(tournament):
    """Smallest dominating sets by plain subset enumeration in size order."""
    n = tournament.n
    cover = {
        v: {u for triple in triple_table(n).tolist() if tail(tournament, triple) == v
            for u in triple if u != v}
        for v in range(n)
    }
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            covered = set(subset)
            for x in subset:
                covered |= cover[x]
            if len(covered) == n:
                return size, subset
    raise AssertionError('the full vertex set always dominates')


def four_distinct_tails_oracle(tournament):
    """Every 4-set, in lex order, whose four triples have four distinct tails."""
    failures = []
    for quad in combinations(range(tournament.n), 4):
        tails = {tail(tournament, triple) for triple in combinations(quad, 3)}
        if len(tails) == 4:
            failures.append(quad)
    return failures


def has_sk_oracle(digraph, k):
    n = digraph.n
    return all(
        any(v not in subset and all(digraph.has_arc(v, x) for x in subset) for v in range(n))
        for subset in combinations(range(n), k)
    )


def random_girth_digraphs(count, min_girth, n_range=(4, 12), seed=0):
    """`count` seeded digraphs with girth >= min_girth, n cycling through n_range (inclusive).

    Arc probability 1/n keeps short cycles rare enough for rejection sampling.
    """
    low, high = n_range
    digraphs = []
    for i in range(count):
        n = low + i % (high - low + 1)
        digraphs.append(random_digraph(n, 1 / n, seed + i, min_girth=min_girth, max_retries=5000))
    return digraphs


def all_digraphs(n):
    """Every loop-free digraph on n vertices (4096 for n = 4)."""
    pairs = list(permutations(range(n), 2))
    for counter in range(1 << len(pairs)):
        yield Digraph.from_arcs(n, (pair for i, pair in enumerate(pairs) if counter >> i & 1))


def tournament_with_tails(n, chooser):
    """Tournament3 whose tail for each triple is chooser(triple)."""
    return Tournament3.from_tail_vertices(
        n, {tuple(triple): chooser(tuple(triple)) for triple in triple_table(n).tolist()}
    )


def c4_tournament():
    """T_D of the directed 4-cycle, written out by hand."""
    return Tournament3.from_tail_vertices(4, {(0, 1, 2): 0, (1, 2, 3): 1, (0, 2, 3): 2, (0, 1, 3): 3})


def colex_key(subset):
    return tuple(reversed(subset))
