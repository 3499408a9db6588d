"""
3-tournament core: tail storage, coverage, domination checking, exact and
greedy domination solvers, the pair-tail property and generators.

A Tournament3 stores one byte per triple, indexed by the colex rank of the
sorted triple (a < b < c); the byte selects a, b or c as the tail.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from tournaments.combinatorics import bits, colex_subsets, colex_unrank, to_mask
from tournaments.exceptions import (
    ConstructionError,
    InvalidParameters,
    InvalidTriple,
    InvalidVertexSet,
)

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def triple_rank(a: int, b: int, c: int) -> int:
    """Colex rank of the sorted triple a < b < c: C(c,3) + C(b,2) + C(a,1)."""
    if not (0 <= a < b < c):
        raise InvalidTriple(f'triple ({a}, {b}, {c}) is not strictly increasing and non-negative')
    return comb(c, 3) + comb(b, 2) + a


def triple_unrank(index: int, n: int) -> Triple:
    if not 0 <= index < comb(n, 3):
        raise InvalidTriple(f'rank {index} is outside 0..C({n},3)-1')
    return colex_unrank(index, 3)


@lru_cache(maxsize=64)
def triple_table(n: int) -> np.ndarray:
    """All triples of range(n) in colex order, as an (C(n,3), 3) array."""
    rows = [(a, b, c) for c in range(2, n) for b in range(1, c) for a in range(b)]
    table = np.array(rows, dtype=np.int64).reshape(-1, 3)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class Tournament3:
    """
    Complete 3-uniform tournament on vertices 0..n-1.

    ``tails[r]`` in {0, 1, 2} picks the tail of the triple of colex rank r.
    """
    n: int
    tails: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameters('a 3-tournament needs at least three vertices')
        raw = np.asarray(self.tails)
        if raw.shape != (comb(self.n, 3),):
            raise InvalidParameters(
                f'expected {comb(self.n, 3)} tail entries for n={self.n}, got {raw.size}'
            )
        if raw.size and (raw.min() < 0 or raw.max() > 2):
            raise InvalidParameters('tail entries must be 0, 1 or 2')
        tails = raw.astype(np.uint8)
        tails.setflags(write=False)
        object.__setattr__(self, 'tails', tails)

    @classmethod
    def from_tail_vertices(cls, n: int, mapping: Mapping[Iterable[int], int]) -> 'Tournament3':
        """Build from {triple: tail vertex}; every triple must appear exactly once."""
        if n < 3:
            raise InvalidParameters('a 3-tournament needs at least three vertices')
        tails = np.full(comb(n, 3), 255, dtype=np.uint8)
        for triple, tail_vertex in mapping.items():
            a, b, c = _checked_triple(triple, n)
            if tail_vertex not in (a, b, c):
                raise InvalidTriple(f'tail {tail_vertex} is not a member of {(a, b, c)}')
            rank = triple_rank(a, b, c)
            if tails[rank] != 255:
                raise InvalidTriple(f'triple {(a, b, c)} given twice')
            tails[rank] = (a, b, c).index(tail_vertex)
        missing = np.flatnonzero(tails == 255)
        if missing.size:
            raise InvalidTriple(f'no tail for triple {triple_unrank(int(missing[0]), n)}')
        return cls(n, tails)

    def __eq__(self, other):
        if not isinstance(other, Tournament3):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.tails, other.tails)

    def __hash__(self):
        return hash((self.n, self.tails.tobytes()))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def triple_count(self) -> int:
        return int(self.tails.size)

    @cached_property
    def tail_vertices(self) -> np.ndarray:
        """Tail vertex of every triple, by colex rank."""
        table = triple_table(self.n)
        vertices = table[np.arange(table.shape[0]), self.tails]
        vertices.setflags(write=False)
        return vertices

    @cached_property
    def tail_counts(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in np.bincount(self.tail_vertices, minlength=self.n))

    @cached_property
    def cover_masks(self) -> Tuple[int, ...]:
        """cover_masks[v]: bitmask of the vertices sharing a tail-v triple with v."""
        table = triple_table(self.n)
        masks = []
        for v in range(self.n):
            members = np.unique(table[self.tail_vertices == v])
            masks.append(to_mask(int(u) for u in members if u != v))
        return tuple(masks)

    def tail_of_rank(self, rank: int) -> int:
        return int(self.tail_vertices[rank])


def _checked_triple(triple: Iterable[int], n: int) -> Triple:
    members = sorted(int(v) for v in triple)
    if len(members) != 3 or len(set(members)) != 3:
        raise InvalidTriple(f'{tuple(triple)} is not a set of three distinct vertices')
    if members[0] < 0 or members[2] >= n:
        raise InvalidTriple(f'{tuple(members)} leaves the vertex range 0..{n - 1}')
    return tuple(members)


def _checked_vertex(tournament: Tournament3, v: int) -> int:
    if not 0 <= v < tournament.n:
        raise InvalidVertexSet(f'vertex {v} is outside 0..{tournament.n - 1}')
    return v


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------

def tail(tournament: Tournament3, triple: Iterable[int]) -> int:
    a, b, c = _checked_triple(triple, tournament.n)
    return tournament.tail_of_rank(triple_rank(a, b, c))


def tail_count(tournament: Tournament3, v: int) -> int:
    return tournament.tail_counts[_checked_vertex(tournament, v)]


def tail_count_within(tournament: Tournament3, v: int, within: Iterable[int]) -> int:
    """Number of triples inside `within` whose tail is v (the sub-tournament T[R])."""
    return int(_tail_counts_within(tournament, to_mask(within))[_checked_vertex(tournament, v)])


def _tail_counts_within(tournament: Tournament3, mask: int) -> np.ndarray:
    inside = np.array([mask >> v & 1 for v in range(tournament.n)], dtype=bool)
    table = triple_table(tournament.n)
    selected = inside[table[:, 0]] & inside[table[:, 1]] & inside[table[:, 2]]
    return np.bincount(tournament.tail_vertices[selected], minlength=tournament.n)


def cover_set(tournament: Tournament3, v: int) -> FrozenSet[int]:
    """Union of A - {v} over the triples A with tail v."""
    return frozenset(bits(tournament.cover_masks[_checked_vertex(tournament, v)]))


@dataclass(frozen=True)
class DominationCheck:
    dominating: bool
    witness_triples: Dict[int, Triple]
    undominated: FrozenSet[int] = frozenset()

    def __bool__(self):
        return self.dominating


def is_dominating(tournament: Tournament3, vertices: Iterable[int]) -> DominationCheck:
    """
    Every vertex outside X must lie in a triple whose tail is in X.

    Witnesses are the smallest-rank such triple for each dominated vertex.
    """
    members = set(vertices)
    if not members:
        raise InvalidVertexSet('a dominating set must be nonempty')
    for v in members:
        _checked_vertex(tournament, v)
    outside = set(range(tournament.n)) - members
    witnesses: Dict[int, Triple] = {}
    if outside:
        in_x = np.zeros(tournament.n, dtype=bool)
        in_x[list(members)] = True
        table = triple_table(tournament.n)
        for rank in np.flatnonzero(in_x[tournament.tail_vertices]):
            triple = tuple(int(u) for u in table[rank])
            for u in triple:
                if u in outside and u not in witnesses:
                    witnesses[u] = triple
            if len(witnesses) == len(outside):
                break
    undominated = frozenset(outside - witnesses.keys())
    return DominationCheck(not undominated, witnesses, undominated)


# ---------------------------------------------------------------------------
# Domination solvers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LowerBoundRecord:
    """Every set of `size` vertices was checked and none dominates."""
    size: int
    sets_examined: int
    search_nodes: int


@dataclass(frozen=True)
class DominationCertificate:
    value: int
    witness: Tuple[int, ...]
    witness_triples: Dict[int, Triple]
    mode: str
    lower_bound_record: Optional[LowerBoundRecord] = None


@dataclass(frozen=True)
class GreedyStep:
    remaining: int
    vertex: int
    tail_count: int
    remaining_after: int


class _SetCoverSearch:
    """
    Branch-and-bound over the set-cover instance with sets cover(x) + {x}.

    Branches on the undominated vertex with the fewest candidate coverers and
    prunes when budget * (largest residual cover) < undominated count.
    """

    def __init__(self, tournament: Tournament3):
        n = tournament.n
        self.n = n
        self.full = (1 << n) - 1
        self.sets = [tournament.cover_masks[x] | 1 << x for x in range(n)]
        self.coverers = [to_mask(x for x in range(n) if self.sets[x] >> u & 1) for u in range(n)]
        self.nodes = 0

    def coverable(self, undominated: int, budget: int, allowed: int) -> bool:
        """Can at most `budget` sets with ids in `allowed` cover `undominated`?"""
        self.nodes += 1
        if not undominated:
            return True
        if budget == 0 or not allowed:
            return False
        need = undominated.bit_count()
        best = max((self.sets[x] & undominated).bit_count() for x in bits(allowed))
        if best * budget < need:
            return False
        pivot_candidates = None
        for u in bits(undominated):
            candidates = self.coverers[u] & allowed
            if pivot_candidates is None or candidates.bit_count() < pivot_candidates.bit_count():
                pivot_candidates = candidates
                if not candidates:
                    return False
        for x in bits(pivot_candidates):
            if self.coverable(undominated & ~self.sets[x], budget - 1, allowed):
                return True
        return False

    def lexicographically_least(self, size: int) -> List[int]:
        """Lexicographically least cover with exactly `size` sets; `size` must be optimal."""
        chosen = []
        undominated = self.full
        lowest = 0
        while undominated:
            for x in range(lowest, self.n):
                rest = undominated & ~self.sets[x]
                later = self.full & ~((2 << x) - 1)
                if self.coverable(rest, size - len(chosen) - 1, later):
                    chosen.append(x)
                    undominated = rest
                    lowest = x + 1
                    break
            else:
                raise ConstructionError('no cover of the optimal size was found')
        return chosen

    def exhaust(self, size: int) -> int:
        """Check every set of `size` vertices fails to dominate; return how many were checked."""
        examined = 0
        for subset in combinations(range(self.n), size):
            examined += 1
            covered = 0
            for x in subset:
                covered |= self.sets[x]
            if covered == self.full:
                raise ConstructionError(f'{subset} dominates below the claimed optimum')
        return examined


def domination_number_exact(tournament: Tournament3) -> DominationCertificate:
    """
    Exact domination number by iterative deepening on |X|.

    The witness is the lexicographically least optimal dominating set; the
    lower bound is certified by checking all C(n, value-1) smaller sets.
    """
    search = _SetCoverSearch(tournament)
    value = next(
        size for size in range(1, tournament.n + 1)
        if search.coverable(search.full, size, search.full)
    )
    logger.debug('exact domination number %d after %d nodes', value, search.nodes)
    witness = tuple(search.lexicographically_least(value))
    examined = search.exhaust(value - 1)
    check = is_dominating(tournament, witness)
    if not check.dominating:
        raise ConstructionError(f'exact witness {witness} does not dominate')
    return DominationCertificate(
        value=value,
        witness=witness,
        witness_triples=check.witness_triples,
        mode='exact',
        lower_bound_record=LowerBoundRecord(value - 1, examined, search.nodes),
    )


def greedy_dominating_set(tournament: Tournament3) -> Tuple[DominationCertificate, List[GreedyStep]]:
    """
    Repeatedly take the vertex with the most tails inside the remaining set R.

    Removal uses the cover in the full tournament, which only removes more. Once
    |R| <= 2 no triple fits inside R, so leftovers join X unless already covered.
    """
    remaining = tournament.full_mask
    chosen: List[int] = []
    steps: List[GreedyStep] = []
    while remaining.bit_count() >= 3:
        counts = _tail_counts_within(tournament, remaining)
        v = int(np.argmax(counts))
        before = remaining.bit_count()
        chosen.append(v)
        remaining &= ~(tournament.cover_masks[v] | 1 << v)
        steps.append(GreedyStep(before, v, int(counts[v]), remaining.bit_count()))
        logger.debug('greedy pick %d with %d tails, %d vertices left', v, counts[v], remaining.bit_count())
    covered = 0
    for x in chosen:
        covered |= tournament.cover_masks[x] | 1 << x
    for u in bits(remaining):
        if not covered >> u & 1:
            chosen.append(u)
            covered |= tournament.cover_masks[u] | 1 << u
    witness = tuple(sorted(chosen))
    check = is_dominating(tournament, witness)
    if not check.dominating:
        raise ConstructionError(f'greedy set {witness} does not dominate')
    certificate = DominationCertificate(len(witness), witness, check.witness_triples, 'greedy')
    return certificate, steps


# ---------------------------------------------------------------------------
# Four-vertex structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairTailReport:
    holds: bool
    counterexample: Optional[Tuple[int, int, int, int]] = None
    sets_examined: int = 0


def _four_set_tails(tail_vertices: Sequence[int], quad: Sequence[int]) -> Tuple[int, int, int, int]:
    a, b, c, d = quad
    return (
        tail_vertices[comb(c, 3) + comb(b, 2) + a],
        tail_vertices[comb(d, 3) + comb(b, 2) + a],
        tail_vertices[comb(d, 3) + comb(c, 2) + a],
        tail_vertices[comb(d, 3) + comb(c, 2) + b],
    )


def pair_tail_property(tournament: Tournament3) -> PairTailReport:
    """Every 4-set must contain two triples with the same tail; reports the first failure."""
    if tournament.n < 4:
        raise InvalidParameters('the pair-tail property needs n >= 4')
    tail_vertices = tournament.tail_vertices.tolist()
    examined = 0
    for quad in colex_subsets(tournament.n, 4):
        examined += 1
        if len(set(_four_set_tails(tail_vertices, quad))) == 4:
            return PairTailReport(False, quad, examined)
    return PairTailReport(True, None, examined)


@dataclass(frozen=True)
class SharedTailProfile:
    """For each 4-set, the largest number of its triples sharing one tail."""
    minimum: int
    histogram: Dict[int, int]


def shared_tail_profile(tournament: Tournament3) -> SharedTailProfile:
    if tournament.n < 4:
        raise InvalidParameters('the shared-tail profile needs n >= 4')
    tail_vertices = tournament.tail_vertices.tolist()
    histogram = Counter(
        max(Counter(_four_set_tails(tail_vertices, quad)).values())
        for quad in colex_subsets(tournament.n, 4)
    )
    return SharedTailProfile(min(histogram), dict(sorted(histogram.items())))


# ---------------------------------------------------------------------------
# Generators and relabelling
# ---------------------------------------------------------------------------

def random_tournament3(n: int, seed: int) -> Tournament3:
    """Each tail uniform over its triple, drawn from numpy's default_rng(seed)."""
    if n < 3:
        raise InvalidParameters('a 3-tournament needs at least three vertices')
    rng = np.random.default_rng(seed)
    return Tournament3(n, rng.integers(0, 3, size=comb(n, 3), dtype=np.uint8))


def relabel_tournament(tournament: Tournament3, perm: Sequence[int]) -> Tournament3:
    """Rename vertex v to perm[v]."""
    n = tournament.n
    if sorted(perm) != list(range(n)):
        raise InvalidParameters('relabelling needs a permutation of 0..n-1')
    table = triple_table(n)
    mapping = {
        tuple(perm[int(u)] for u in table[rank]): perm[int(tournament.tail_vertices[rank])]
        for rank in range(tournament.triple_count)
    }
    return Tournament3.from_tail_vertices(n, mapping)


def ceil_average_tails(n: int) -> int:
    """ceil(C(n,3) / n): the pigeonhole floor on the largest tail count."""
    return -(-comb(n, 3) // n)
