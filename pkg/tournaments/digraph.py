"""
Directed-graph core: representation, girth, acyclicity, induced subgraphs,
longest-path starts, property S_k and graph powers.

Out-neighbourhoods are stored as integer bitmasks, so "v dominates X" is the
superset test ``X & ~out[v] == 0`` and the common in-neighbours of a set are a
single AND over in-masks.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from tournaments.combinatorics import bits, colex_subsets, colex_unrank
from tournaments.exceptions import CyclicInput, InvalidParameters, InvalidVertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Digraph:
    """
    Simple loop-free digraph on vertices 0..n-1.

    ``out[v]`` is the bitmask of out-neighbours of v. Vertex ids double as the
    fixed ordering used by the T_D construction.
    """
    n: int
    out: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameters('a digraph needs at least one vertex')
        if len(self.out) != self.n:
            raise InvalidParameters(f'expected {self.n} out-masks, got {len(self.out)}')
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.out):
            if mask < 0 or mask & ~full:
                raise InvalidVertexSet(f'out-neighbours of {v} leave the vertex range')
            if mask >> v & 1:
                raise InvalidParameters(f'self-loop at vertex {v}')

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> 'Digraph':
        """Build a digraph from ordered pairs; self-loops and duplicates are rejected."""
        if n < 1:
            raise InvalidParameters('a digraph needs at least one vertex')
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexSet(f'arc ({u}, {v}) leaves the vertex range 0..{n - 1}')
            if u == v:
                raise InvalidParameters(f'self-loop at vertex {u}')
            if out[u] >> v & 1:
                raise InvalidParameters(f'duplicate arc ({u}, {v})')
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for u, mask in enumerate(self.out):
            for v in bits(mask):
                masks[v] |= 1 << u
        return tuple(masks)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> Iterator[Tuple[int, int]]:
        """Arcs in row-major order."""
        for u, mask in enumerate(self.out):
            for v in bits(mask):
                yield u, v

    @property
    def arc_count(self) -> int:
        return sum(mask.bit_count() for mask in self.out)

    def out_neighbors(self, v: int) -> List[int]:
        return list(bits(self.out[v]))

    def __str__(self):
        arcs = ', '.join(f'{u}->{v}' for u, v in self.arcs())
        return f'Digraph(n={self.n}, arcs=[{arcs}])'


class GirthKind(str, Enum):
    FINITE = 'finite'
    INFINITE = 'infinite'


@dataclass(frozen=True)
class GirthResult:
    kind: GirthKind
    length: Optional[int] = None
    witness: Tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.kind is GirthKind.FINITE

    def at_least(self, bound: int) -> bool:
        """The premise "girth at least `bound`"; acyclic digraphs satisfy every bound."""
        return not self.is_finite or self.length >= bound


@dataclass(frozen=True)
class SkReport:
    k: int
    holds: bool
    counterexample: Optional[Tuple[int, ...]] = None
    dominator_map: Optional[Dict[Tuple[int, ...], int]] = field(default=None, compare=False)
    sets_examined: int = 0


@dataclass(frozen=True)
class InducedSubgraph:
    """A relabelled induced subgraph; ``labels[i]`` is the original id of vertex i."""
    digraph: Digraph
    labels: Tuple[int, ...]

    def original(self, v: int) -> int:
        return self.labels[v]


class AuditStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    NOT_APPLICABLE = 'not-applicable'


@dataclass(frozen=True)
class GirthAudit:
    n: int
    s2: bool
    girth: GirthResult
    bound: int
    status: AuditStatus


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def empty_digraph(n: int) -> Digraph:
    return Digraph(n, (0,) * n)


def cycle_digraph(n: int) -> Digraph:
    """The directed cycle C_n: i -> i+1 (mod n)."""
    if n < 2:
        raise InvalidParameters('a directed cycle needs at least two vertices')
    return Digraph.from_arcs(n, ((i, (i + 1) % n) for i in range(n)))


def paley_tournament(p: int) -> Digraph:
    """Paley tournament on Z_p: i -> i + r for every nonzero quadratic residue r."""
    if p < 3 or p % 4 != 3 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise InvalidParameters('Paley tournaments need a prime p with p = 3 (mod 4)')
    residues = sorted({(x * x) % p for x in range(1, p)})
    return Digraph.from_arcs(p, ((i, (i + r) % p) for i in range(p) for r in residues))


def relabel(digraph: Digraph, perm: Sequence[int]) -> Digraph:
    """Rename vertex v to perm[v]."""
    n = digraph.n
    if sorted(perm) != list(range(n)):
        raise InvalidParameters('relabelling needs a permutation of 0..n-1')
    return Digraph.from_arcs(n, ((perm[u], perm[v]) for u, v in digraph.arcs()))


def complete_to_tournament(digraph: Digraph) -> Digraph:
    """
    Orient every pair joined by neither arc from the smaller to the larger id.

    Adding arcs never destroys property S_k, so the completion keeps every S_k
    the input had. Digraphs with a 2-cycle cannot be completed.
    """
    out = list(digraph.out)
    for u in range(digraph.n):
        for v in range(u + 1, digraph.n):
            forward, backward = digraph.has_arc(u, v), digraph.has_arc(v, u)
            if forward and backward:
                raise InvalidParameters(f'2-cycle between {u} and {v}; no tournament contains it')
            if not forward and not backward:
                out[u] |= 1 << v
    return Digraph(digraph.n, tuple(out))


# ---------------------------------------------------------------------------
# Cycles and acyclicity
# ---------------------------------------------------------------------------

def _distances_to(digraph: Digraph, target: int, allowed: int) -> Dict[int, int]:
    """BFS distances from every allowed vertex to `target`, over arcs inside `allowed`."""
    dist = {target: 0}
    frontier = 1 << target
    seen = frontier
    depth = 0
    while frontier:
        depth += 1
        reached = 0
        for v in bits(frontier):
            reached |= digraph.in_masks[v]
        reached &= allowed & ~seen
        for v in bits(reached):
            dist[v] = depth
        seen |= reached
        frontier = reached
    return dist


def girth(digraph: Digraph) -> GirthResult:
    """
    Length of a shortest directed cycle, with a canonical witness.

    Cycles are scanned by their smallest vertex s, looking only at vertices >= s.
    Among the shortest cycles the witness is the lexicographically least
    sequence that starts at its smallest vertex.
    """
    best_length = None
    best_start = None
    best_dist = None
    for s in range(digraph.n):
        allowed = digraph.full_mask & ~((1 << s) - 1)
        dist = _distances_to(digraph, s, allowed)
        candidates = [dist[w] + 1 for w in bits(digraph.out[s] & allowed) if w in dist]
        if candidates:
            length = min(candidates)
            if best_length is None or length < best_length:
                best_length, best_start, best_dist = length, s, dist
        if best_length == 2:
            break
    if best_length is None:
        return GirthResult(GirthKind.INFINITE)

    # Walk greedily along shortest-return vertices; minimality keeps the walk simple.
    allowed = digraph.full_mask & ~((1 << best_start) - 1)
    cycle = [best_start]
    current = best_start
    for step in range(1, best_length):
        remaining = best_length - step
        current = next(
            w for w in bits(digraph.out[current] & allowed)
            if best_dist.get(w) == remaining
        )
        cycle.append(current)
    return GirthResult(GirthKind.FINITE, best_length, tuple(cycle))


def topological_order(digraph: Digraph) -> List[int]:
    """Kahn's algorithm, always releasing the smallest available vertex."""
    indegree = [mask.bit_count() for mask in digraph.in_masks]
    ready = [v for v in range(digraph.n) if indegree[v] == 0]
    order = []
    while ready:
        v = min(ready)
        ready.remove(v)
        order.append(v)
        for w in bits(digraph.out[v]):
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
    if len(order) != digraph.n:
        raise CyclicInput('digraph has a directed cycle')
    return order


def is_acyclic(digraph: Digraph) -> bool:
    try:
        topological_order(digraph)
    except CyclicInput:
        return False
    return True


# ---------------------------------------------------------------------------
# Induced subgraphs and longest paths
# ---------------------------------------------------------------------------

def induced(digraph: Digraph, vertices: Iterable[int]) -> InducedSubgraph:
    """
    Sub-digraph on `vertices`, relabelled 0..|S|-1 by increasing original id.

    The relabelling is monotone, so the fixed ordering is preserved.
    """
    labels = tuple(sorted(set(vertices)))
    if not labels:
        raise InvalidVertexSet('induced subgraph of an empty vertex set')
    if labels[0] < 0 or labels[-1] >= digraph.n:
        raise InvalidVertexSet(f'vertex set {labels} leaves the range 0..{digraph.n - 1}')
    position = {v: i for i, v in enumerate(labels)}
    out = []
    for v in labels:
        mask = 0
        for w in labels:
            if digraph.out[v] >> w & 1:
                mask |= 1 << position[w]
        out.append(mask)
    return InducedSubgraph(Digraph(len(labels), tuple(out)), labels)


def longest_path_lengths(digraph: Digraph) -> List[int]:
    """len(v) = 0 for sinks, else 1 + max over out-neighbours; raises CyclicInput."""
    order = topological_order(digraph)
    length = [0] * digraph.n
    for v in reversed(order):
        successors = [length[w] for w in bits(digraph.out[v])]
        if successors:
            length[v] = 1 + max(successors)
    return length


def max_path_starts(digraph: Digraph) -> List[int]:
    """Vertices, increasing, whose longest outgoing path attains the global maximum."""
    length = longest_path_lengths(digraph)
    longest = max(length)
    return [v for v in range(digraph.n) if length[v] == longest]


# ---------------------------------------------------------------------------
# Property S_k
# ---------------------------------------------------------------------------

def _scan_sk(in_masks, n, k, start, stop, record):
    """
    Scan colex ranks [start, stop); return (first failing rank or None, dominators, examined).

    A k-set is dominated iff the AND of its members' in-masks is nonzero; the
    smallest common in-neighbour is recorded as its dominator.
    """
    dominators = {} if record else None
    examined = 0
    for offset, subset in enumerate(colex_subsets(n, k, start, stop)):
        examined += 1
        common = -1
        for x in subset:
            common &= in_masks[x]
            if not common:
                return start + offset, dominators, examined
        if record:
            dominators[subset] = (common & -common).bit_length() - 1
    return None, dominators, examined


def _chunks(total: int, workers: int) -> List[Tuple[int, int]]:
    size = -(-total // workers)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def has_sk(digraph: Digraph, k: int, record: bool = False, workers: int = 1) -> SkReport:
    """
    Decide property S_k: every k-set has an outside vertex with arcs to all of it.

    The counterexample is the first failing k-set in colex order, whatever the
    worker count.
    """
    n = digraph.n
    if k < 1 or k >= n:
        raise InvalidParameters(f'S_k needs 1 <= k < n (got k={k}, n={n})')
    total = comb(n, k)
    in_masks = digraph.in_masks
    if workers <= 1 or total < 2 * workers:
        failing, dominators, examined = _scan_sk(in_masks, n, k, 0, total, record)
    else:
        chunks = _chunks(total, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                _scan_sk,
                [in_masks] * len(chunks), [n] * len(chunks), [k] * len(chunks),
                [lo for lo, _ in chunks], [hi for _, hi in chunks], [record] * len(chunks),
            ))
        failures = [r[0] for r in results if r[0] is not None]
        failing = min(failures) if failures else None
        # Examined counts follow the serial scan so reports do not depend on workers.
        examined = total if failing is None else failing + 1
        dominators = None
        if record and failing is None:
            dominators = {}
            for _, partial, _ in results:
                dominators.update(partial)
    if failing is not None:
        counterexample = colex_unrank(failing, k)
        logger.debug('S_%d fails at %s', k, counterexample)
        return SkReport(k, False, counterexample, None, examined)
    return SkReport(k, True, None, dominators, examined)


# ---------------------------------------------------------------------------
# Powers and the girth bound
# ---------------------------------------------------------------------------

def power(digraph: Digraph, b: int) -> Digraph:
    """Arc x -> y iff x != y and some directed path of length 1..b joins them."""
    if b < 1:
        raise InvalidParameters('power needs b >= 1')
    out = []
    for x in range(digraph.n):
        seen = 1 << x
        frontier = 1 << x
        reach = 0
        for _ in range(b):
            step = 0
            for v in bits(frontier):
                step |= digraph.out[v]
            reach |= step
            frontier = step & ~seen
            seen |= step
            if not frontier:
                break
        out.append(reach & ~(1 << x))
    return Digraph(digraph.n, tuple(out))


def girth_bound(n: int) -> int:
    """2 * ceil(log2 log2 n), the rounded form of the S_2 girth bound."""
    return 2 * math.ceil(math.log2(math.log2(n)))


def girth_bound_audit(digraph: Digraph) -> GirthAudit:
    """Check girth <= 2*ceil(log2 log2 n) on digraphs with S_2 and a cycle."""
    n = digraph.n
    if n < 3:
        raise InvalidParameters('the girth-bound audit needs n >= 3')
    s2 = has_sk(digraph, 2).holds
    result = girth(digraph)
    bound = girth_bound(n)
    if not s2 or not result.is_finite:
        status = AuditStatus.NOT_APPLICABLE
    elif result.length <= bound:
        status = AuditStatus.PASS
    else:
        status = AuditStatus.FAIL
    return GirthAudit(n, s2, result, bound, status)
