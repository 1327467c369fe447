"""Exception hierarchy shared by the library and the command line front end."""


class ArborError(Exception):
    """Base class for every error raised by this package."""


class GraphError(ArborError, ValueError):
    pass


class DuplicateLabel(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class WrongSubsetSize(GraphError):
    pass


class InvalidEdgeSubset(GraphError):
    pass


class LinalgError(ArborError, ValueError):
    pass


class NotSquare(LinalgError):
    pass


class ShapeMismatch(LinalgError):
    pass


class IndexOutOfRange(LinalgError, IndexError):
    pass


class UnsortedSelector(LinalgError):
    pass


class ColumnSumsNonzero(LinalgError):
    pass


class CapExceeded(ArborError):
    """Raised when brute force would examine more subsets than allowed."""

    def __init__(self, needed: int, cap: int):
        super().__init__(f"{needed} edge subsets exceed the cap of {cap}")
        self.needed = needed
        self.cap = cap


class NotATree(ArborError, ValueError):
    pass


class ZeroVector(ArborError, ValueError):
    pass


class ParseError(ArborError, ValueError):
    pass
