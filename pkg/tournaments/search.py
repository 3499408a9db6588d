"""
Witness search: small digraphs with property S_k and girth at least l,
tournament orientations of K_n, and random digraphs.

The exhaustive search walks the n(n-1) ordered pairs in row-major order and
decides no-arc before arc. A partial assignment is dropped as soon as a new arc
closes a directed cycle shorter than l, or when, at the end of a row, some
k-set can no longer acquire a dominator.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from tournaments.combinatorics import bits
from tournaments.digraph import Digraph, girth, has_sk
from tournaments.exceptions import InvalidParameters, RetriesExhausted, SearchTooLarge

logger = logging.getLogger(__name__)

DEFAULT_ARC_PROBABILITY = 0.5
DEFAULT_TRIALS = 1000
DEFAULT_RETRIES = 1000
MAX_ORIENTATION_ORDER = 6
# Arc decisions fixed per subtree; the split never depends on the worker count.
PREFIX_DEPTH = 4


class SearchMode(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    RANDOM = 'random'


@dataclass
class SearchReport:
    parameters: Dict[str, object]
    witnesses: List[Digraph] = field(default_factory=list)
    exhausted: bool = False
    nodes_explored: int = 0
    leaves_visited: int = 0
    min_order: Optional[int] = None
    exhausted_orders: List[int] = field(default_factory=list)
    note: str = ''


def is_witness(digraph: Digraph, k: int, l: int) -> bool:
    """Independent re-check of the (girth >= l, S_k) premise pair."""
    return girth(digraph).at_least(l) and has_sk(digraph, k).holds


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------

@dataclass
class _SubtreeResult:
    witnesses: List[Tuple[int, ...]]
    nodes_at_emission: List[int]
    leaves_at_emission: List[int]
    nodes: int
    leaves: int


class _ExhaustiveSearch:
    """Depth-first arc/no-arc search below one fixed prefix of decisions."""

    def __init__(self, n: int, k: int, l: int, prune: bool, limit: Optional[int]):
        self.n, self.k, self.l = n, k, l
        self.prune = prune
        self.limit = limit
        self.pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        # Index just past the last pair of each row.
        self.row_ends = {(u + 1) * (n - 1): u for u in range(n)}
        self.result = _SubtreeResult([], [], [], 0, 0)

    def closes_short_cycle(self, out: List[int], u: int, v: int) -> bool:
        """Would arc u -> v close a cycle shorter than l, i.e. is u within l-2 steps of v?"""
        frontier = seen = 1 << v
        for _ in range(self.l - 2):
            step = 0
            for w in bits(frontier):
                step |= out[w]
            if step >> u & 1:
                return True
            frontier = step & ~seen
            seen |= step
            if not frontier:
                break
        return False

    def feasible(self, out: List[int], last_row: int) -> bool:
        """After rows 0..last_row are final, can every k-set still get a dominator?"""
        later = list(range(last_row + 1, self.n))
        if len(later) > self.k:
            return True
        # Only k-sets containing every undecided row lack a future dominator.
        earlier = range(last_row + 1)
        for head in combinations(earlier, self.k - len(later)):
            target = 0
            for x in (*head, *later):
                target |= 1 << x
            if not any(target & ~out[v] == 0 for v in earlier if not target >> v & 1):
                return False
        return True

    def finished(self) -> bool:
        return self.limit is not None and len(self.result.witnesses) >= self.limit

    def run(self, prefix: Tuple[int, ...]) -> _SubtreeResult:
        out = [0] * self.n
        for index, decision in enumerate(prefix):
            if not self._apply(out, index, decision):
                self.result.nodes += 1
                return self.result
        self._descend(out, len(prefix))
        return self.result

    def _apply(self, out: List[int], index: int, decision: int) -> bool:
        u, v = self.pairs[index]
        if decision:
            if self.prune and self.closes_short_cycle(out, u, v):
                return False
            out[u] |= 1 << v
        if self.prune and index + 1 in self.row_ends and not self.feasible(out, self.row_ends[index + 1]):
            return False
        return True

    def _descend(self, out: List[int], index: int):
        self.result.nodes += 1
        if index == len(self.pairs):
            self._leaf(out)
            return
        for decision in (0, 1):
            if self.finished():
                return
            saved = out[self.pairs[index][0]]
            if self._apply(out, index, decision):
                self._descend(out, index + 1)
            out[self.pairs[index][0]] = saved

    def _leaf(self, out: List[int]):
        self.result.leaves += 1
        candidate = Digraph(self.n, tuple(out))
        if not is_witness(candidate, self.k, self.l):
            return
        self.result.witnesses.append(candidate.out)
        self.result.nodes_at_emission.append(self.result.nodes)
        self.result.leaves_at_emission.append(self.result.leaves)


def _search_subtree(n, k, l, prune, limit, prefix) -> _SubtreeResult:
    return _ExhaustiveSearch(n, k, l, prune, limit).run(prefix)


def _exhaustive(n, k, l, limit, prune, workers) -> SearchReport:
    depth = min(PREFIX_DEPTH, n * (n - 1))
    prefixes = list(product((0, 1), repeat=depth))
    args = [(n, k, l, prune, limit, prefix) for prefix in prefixes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_subtree, *zip(*args)))
    else:
        results = []
        found = 0
        for arg in args:
            results.append(_search_subtree(*arg))
            found += len(results[-1].witnesses)
            if limit is not None and found >= limit:
                break

    report = SearchReport(parameters={})
    stopped = False
    for result in results:
        room = None if limit is None else limit - len(report.witnesses)
        if room is not None and len(result.witnesses) >= room:
            report.witnesses.extend(Digraph(n, out) for out in result.witnesses[:room])
            if room:
                report.nodes_explored += result.nodes_at_emission[room - 1]
                report.leaves_visited += result.leaves_at_emission[room - 1]
            stopped = True
            break
        report.witnesses.extend(Digraph(n, out) for out in result.witnesses)
        report.nodes_explored += result.nodes
        report.leaves_visited += result.leaves
    report.exhausted = not stopped
    return report


# ---------------------------------------------------------------------------
# Random search
# ---------------------------------------------------------------------------

def _random_arcs(rng: np.random.Generator, n: int, p: float) -> Digraph:
    matrix = rng.random((n, n)) < p
    np.fill_diagonal(matrix, False)
    out = tuple(int(sum(1 << int(v) for v in np.flatnonzero(row))) for row in matrix)
    return Digraph(n, out)


def _random(n, k, l, limit, p, trials, seed) -> SearchReport:
    rng = np.random.default_rng(seed)
    report = SearchReport(parameters={})
    for _ in range(trials):
        report.nodes_explored += 1
        candidate = _random_arcs(rng, n, p)
        if girth(candidate).at_least(l) and has_sk(candidate, k).holds:
            report.witnesses.append(candidate)
            if limit is not None and len(report.witnesses) >= limit:
                break
    return report


def _degree_signature(digraph: Digraph) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(
        (digraph.out[v].bit_count(), digraph.in_masks[v].bit_count()) for v in range(digraph.n)
    ))


def find_digraphs(
    n: int,
    k: int,
    l: int,
    limit: Optional[int] = None,
    mode: SearchMode = SearchMode.EXHAUSTIVE,
    seed: int = 0,
    p: float = DEFAULT_ARC_PROBABILITY,
    trials: int = DEFAULT_TRIALS,
    prune: bool = True,
    dedup: bool = False,
    workers: int = 1,
) -> SearchReport:
    """
    Search order n for digraphs with S_k and girth at least l.

    Exhaustive mode is complete (``exhausted``) unless `limit` stops it;
    random mode samples `trials` arc sets with per-arc probability `p`.
    Witnesses are re-checked with girth() and has_sk() before they are kept.
    """
    mode = SearchMode(mode)
    if not 1 <= k < n:
        raise InvalidParameters(f'search needs 1 <= k < n (got k={k}, n={n})')
    if l < 2:
        raise InvalidParameters('girth bound l must be at least 2')
    if limit is not None and limit < 1:
        raise InvalidParameters('limit must be positive')
    if not 0.0 <= p <= 1.0:
        raise InvalidParameters('arc probability must lie in [0, 1]')

    if mode is SearchMode.EXHAUSTIVE:
        report = _exhaustive(n, k, l, limit, prune, workers)
    else:
        if trials < 1:
            raise InvalidParameters('random mode needs at least one trial')
        report = _random(n, k, l, limit, p, trials, seed)

    report.witnesses = [w for w in report.witnesses if is_witness(w, k, l)]
    notes = []
    if dedup:
        seen, unique = set(), []
        for witness in report.witnesses:
            signature = _degree_signature(witness)
            if signature not in seen:
                seen.add(signature)
                unique.append(witness)
        report.witnesses = unique
        notes.append('degree-sequence dedup applied (heuristic: one witness kept per in/out degree signature)')
    if not report.witnesses:
        if report.exhausted:
            notes.append(f'exhausted order {n}, none found')
        else:
            notes.append(f'no witness in the explored part of order {n}; nonexistence is not implied')
    report.note = '; '.join(notes)
    report.parameters = {
        'n': n, 'k': k, 'l': l, 'mode': mode.value, 'limit': limit, 'seed': seed,
        'prune': prune, 'dedup': dedup,
    }
    if mode is SearchMode.RANDOM:
        report.parameters.update(p=p, trials=trials)
    logger.info(
        'search n=%d k=%d l=%d (%s): %d witnesses, %d nodes, exhausted=%s',
        n, k, l, mode.value, len(report.witnesses), report.nodes_explored, report.exhausted,
    )
    return report


def min_order(k: int, l: int, n_max: int, workers: int = 1) -> SearchReport:
    """Smallest order in k+1..n_max with a witness, by exhaustive search."""
    if n_max < k + 1:
        raise InvalidParameters('n_max must be at least k+1')
    report = SearchReport(parameters={'k': k, 'l': l, 'n_max': n_max, 'mode': SearchMode.EXHAUSTIVE.value})
    for n in range(k + 1, n_max + 1):
        logger.debug('minimum-order search at n=%d', n)
        found = find_digraphs(n, k, l, limit=1, workers=workers)
        report.nodes_explored += found.nodes_explored
        report.leaves_visited += found.leaves_visited
        if found.witnesses:
            report.min_order = n
            report.witnesses = found.witnesses
            break
        report.exhausted_orders.append(n)
    report.exhausted = report.min_order is None
    if report.min_order is None:
        report.note = f'exhausted up to n_max={n_max}, none found'
    return report


# ---------------------------------------------------------------------------
# Orientations and random digraphs
# ---------------------------------------------------------------------------

def enumerate_tournament_orientations(n: int, max_order: int = MAX_ORIENTATION_ORDER) -> Iterator[Digraph]:
    """
    Every orientation of K_n once, in binary-counter order: bit i of the
    counter reverses the i-th pair (lex order) from smaller -> larger.
    """
    if n < 1:
        raise InvalidParameters('orientations need n >= 1')
    if n > max_order:
        raise SearchTooLarge(f'2^C({n},2) orientations exceed the streaming guard n <= {max_order}')
    pairs = list(combinations(range(n), 2))
    for counter in range(1 << len(pairs)):
        out = [0] * n
        for i, (u, v) in enumerate(pairs):
            if counter >> i & 1:
                out[v] |= 1 << u
            else:
                out[u] |= 1 << v
        yield Digraph(n, tuple(out))


def orientation_census(n: int, k: int, max_order: int = MAX_ORIENTATION_ORDER) -> Dict[str, int]:
    """How many orientations of K_n have property S_k."""
    total = with_sk = 0
    for tournament in enumerate_tournament_orientations(n, max_order):
        total += 1
        with_sk += has_sk(tournament, k).holds
    return {'orientations': total, 'with_sk': with_sk}


def random_digraph(
    n: int,
    p: float,
    seed: int,
    min_girth: Optional[int] = None,
    max_retries: int = DEFAULT_RETRIES,
) -> Digraph:
    """Each ordered pair is an arc with probability p; optionally rejection-sample on girth."""
    if not 0.0 <= p <= 1.0:
        raise InvalidParameters('arc probability must lie in [0, 1]')
    if n < 1:
        raise InvalidParameters('a digraph needs at least one vertex')
    if max_retries < 1:
        raise InvalidParameters('max_retries must be at least 1')
    rng = np.random.default_rng(seed)
    for _ in range(max_retries if min_girth is not None else 1):
        candidate = _random_arcs(rng, n, p)
        if min_girth is None or girth(candidate).at_least(min_girth):
            return candidate
    raise RetriesExhausted(
        f'no digraph with girth >= {min_girth} in {max_retries} draws (n={n}, p={p})'
    )
