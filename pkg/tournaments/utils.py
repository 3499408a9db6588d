"""
Text formats for digraphs and 3-tournaments, and report/witness file output.

Digraph files: first line ``n``, then one ``u v`` arc per line.
Tournament files: first line ``n``, then one ``a b c t`` line per triple.
Blank lines and lines starting with ``#`` are ignored in both.
"""
import json
from math import comb
from pathlib import Path
from typing import Iterator, List, Tuple

from django.core.serializers.json import DjangoJSONEncoder

from tournaments.digraph import Digraph
from tournaments.exceptions import DigraphFormatError, TournamentFormatError
from tournaments.tournament import Tournament3, triple_table


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            yield number, stripped.split()


def _integers(fields: List[str], count: int, number: int, error_class) -> List[int]:
    if len(fields) != count:
        raise error_class(f'expected {count} integer(s), got {len(fields)} field(s)', number)
    try:
        return [int(value) for value in fields]
    except ValueError:
        raise error_class(f'non-integer field in {" ".join(fields)!r}', number) from None


def _header(lines, error_class, minimum: int) -> int:
    try:
        number, fields = next(lines)
    except StopIteration:
        raise error_class('missing vertex count') from None
    (n,) = _integers(fields, 1, number, error_class)
    if n < minimum:
        raise error_class(f'vertex count must be at least {minimum}', number)
    return n


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    n = _header(lines, DigraphFormatError, 1)
    out = [0] * n
    for number, fields in lines:
        u, v = _integers(fields, 2, number, DigraphFormatError)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphFormatError(f'arc {u} {v} leaves the vertex range 0..{n - 1}', number)
        if u == v:
            raise DigraphFormatError(f'self-loop at vertex {u}', number)
        if out[u] >> v & 1:
            raise DigraphFormatError(f'duplicate arc {u} {v}', number)
        out[u] |= 1 << v
    return Digraph(n, tuple(out))


def format_digraph(digraph: Digraph) -> str:
    lines = [str(digraph.n)]
    lines.extend(f'{u} {v}' for u, v in digraph.arcs())
    return '\n'.join(lines) + '\n'


def parse_tournament(text: str) -> Tournament3:
    """Triples may come in any order; duplicates and omissions are rejected."""
    lines = _content_lines(text)
    n = _header(lines, TournamentFormatError, 3)
    mapping = {}
    for number, fields in lines:
        a, b, c, t = _integers(fields, 4, number, TournamentFormatError)
        if not 0 <= a < b < c < n:
            raise TournamentFormatError(f'triple {a} {b} {c} must satisfy 0 <= a < b < c < {n}', number)
        if t not in (a, b, c):
            raise TournamentFormatError(f'tail {t} is not in triple {a} {b} {c}', number)
        if (a, b, c) in mapping:
            raise TournamentFormatError(f'triple {a} {b} {c} appears twice', number)
        mapping[(a, b, c)] = t
    if len(mapping) != comb(n, 3):
        missing = next(t for t in map(tuple, triple_table(n).tolist()) if t not in mapping)
        raise TournamentFormatError(
            f'{comb(n, 3) - len(mapping)} triple(s) missing, first {missing[0]} {missing[1]} {missing[2]}'
        )
    return Tournament3.from_tail_vertices(n, mapping)


def format_tournament(tournament: Tournament3) -> str:
    lines = [str(tournament.n)]
    for (a, b, c), t in zip(triple_table(tournament.n).tolist(), tournament.tail_vertices.tolist()):
        lines.append(f'{a} {b} {c} {t}')
    return '\n'.join(lines) + '\n'


def read_digraph(path) -> Digraph:
    return parse_digraph(Path(path).read_text())


def write_digraph(digraph: Digraph, path) -> Path:
    path = Path(path)
    path.write_text(format_digraph(digraph))
    return path


def read_tournament(path) -> Tournament3:
    return parse_tournament(Path(path).read_text())


def write_tournament(tournament: Tournament3, path) -> Path:
    path = Path(path)
    path.write_text(format_tournament(tournament))
    return path


def dump_report(payload) -> str:
    """Stable JSON text for a serialized report."""
    return json.dumps(payload, cls=DjangoJSONEncoder, indent=2, sort_keys=True) + '\n'


def write_witnesses(witnesses, directory) -> List[Path]:
    """Write witnesses as ``witness-<n>-<index>.dg`` files; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [
        write_digraph(witness, directory / f'witness-{witness.n}-{index}.dg')
        for index, witness in enumerate(witnesses)
    ]
