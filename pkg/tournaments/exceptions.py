"""
Exception hierarchy for the tournaments toolkit.
"""


class TournamentsError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidParameters(TournamentsError, ValueError):
    """A numeric parameter is outside its allowed range."""


class InvalidVertexSet(TournamentsError, ValueError):
    """A vertex set is empty or names vertices outside 0..n-1."""


class InvalidTriple(TournamentsError, ValueError):
    """A triple or triple rank is malformed for the tournament at hand."""


class CyclicInput(TournamentsError):
    """An operation that needs an acyclic digraph received a cyclic one."""


class CyclicTriple(TournamentsError):
    """
    A triple induces a directed cycle, so it has no well-defined tail.

    Raised by build_td for the first such triple in colex order.
    """

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(
            f'triple {{{", ".join(map(str, self.triple))}}} induces a directed cycle '
            f'(the digraph has girth at most 3)'
        )


class RetriesExhausted(TournamentsError):
    """Rejection sampling gave up; the requested parameters are probably infeasible."""


class SearchTooLarge(InvalidParameters):
    """An exhaustive stream was requested for an order beyond its guard."""


class ConstructionError(TournamentsError):
    """A postcondition of a construction or certificate failed."""


class FormatError(TournamentsError, ValueError):
    """A text file does not follow its format."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class DigraphFormatError(FormatError):
    pass


class TournamentFormatError(FormatError):
    pass
