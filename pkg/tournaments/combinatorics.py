"""
Colexicographic ranking of k-subsets.

Subsets are sorted tuples of distinct non-negative integers. The colex rank of
{c_1 < ... < c_k} is sum C(c_i, i), so all subsets of range(m) come before any
subset containing m.
"""
from math import comb
from typing import Iterator, Sequence, Tuple


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of a sorted subset in colex order."""
    return sum(comb(c, i) for i, c in enumerate(subset, start=1))


def colex_unrank(rank: int, k: int) -> Tuple[int, ...]:
    """Inverse of colex_rank for k-subsets."""
    result = []
    for i in range(k, 0, -1):
        # largest c with C(c, i) <= rank
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        result.append(c)
        rank -= comb(c, i)
    return tuple(reversed(result))


def next_colex(subset: list, n: int) -> bool:
    """
    Advance `subset` in place to its colex successor among k-subsets of range(n).

    Returns False when `subset` was the last one.
    """
    k = len(subset)
    for i in range(k):
        limit = subset[i + 1] if i + 1 < k else n
        if subset[i] + 1 < limit:
            subset[i] += 1
            for j in range(i):
                subset[j] = j
            return True
    return False


def colex_subsets(n: int, k: int, start: int = 0, stop: int = None) -> Iterator[Tuple[int, ...]]:
    """Yield the k-subsets of range(n) with colex ranks in [start, stop)."""
    total = comb(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    if k == 0:
        yield ()
        return
    current = list(colex_unrank(start, k))
    for _ in range(stop - start):
        yield tuple(current)
        if not next_colex(current, n):
            return


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
