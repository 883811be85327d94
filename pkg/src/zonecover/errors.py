"""Exception hierarchy shared by every module.

The CLI maps the three base classes onto exit codes: ``FormatError`` -> 2,
``LimitError`` -> 3, anything else derived from ``ZoneCoverError`` -> 1.
"""


class ZoneCoverError(Exception):
    pass


class FormatError(ZoneCoverError):
    pass


class LimitError(ZoneCoverError):
    pass


# pcube-core
class EmptyInput(FormatError):
    pass


class NotIsometric(ZoneCoverError):
    pass


class NotBipartite(ZoneCoverError):
    pass


class NotPartialCube(ZoneCoverError):
    pass


class NotConnected(ZoneCoverError):
    pass


class DimensionTooLarge(LimitError):
    pass


class BadVertexId(ZoneCoverError):
    pass


# cover-solver
class UncoverableVertex(ZoneCoverError):
    pass


class SearchLimitExceeded(LimitError):
    pass


class BudgetInfeasible(ZoneCoverError):
    pass


# arrangement
class DegenerateArrangement(ZoneCoverError):
    pass


class CellCountMismatch(ZoneCoverError):
    pass


class LimitExceeded(LimitError):
    pass


# acyclic / special graphs
class TooManyOrientations(LimitError):
    pass


class BadParameters(ZoneCoverError):
    pass


class NotATree(ZoneCoverError):
    pass


# poset
class TooManyDownsets(LimitError):
    pass


class NotAPoset(ZoneCoverError):
    pass

