"""Exception hierarchy shared by every module of the package."""


class BergeError(Exception):
    """Base class for all package errors."""


class InvalidParams(BergeError, ValueError):
    pass


class VertexOutOfRange(InvalidParams):
    pass


class NonUniformEdge(InvalidParams):
    pass


class DuplicateEdge(InvalidParams):
    pass


class LinearityViolation(InvalidParams):
    """Two edges share at least two vertices.

    ``pair`` holds the first offending vertex pair, ``edges`` the two edges.
    """

    def __init__(self, pair, edges):
        self.pair = tuple(pair)
        self.edges = tuple(edges)
        super().__init__(f"edges {edges[0]} and {edges[1]} share the pair {self.pair}")


class SameVertex(InvalidParams):
    pass


class EmptySet(InvalidParams):
    pass


class NotAdjacent(InvalidParams):
    pass


class InvalidT(InvalidParams):
    pass


class DivisibilityViolated(InvalidParams):
    pass


class NotEnoughColorEdges(InvalidParams):
    pass


class DimensionMismatch(InvalidParams):
    pass


class NotConnected(BergeError):
    pass


class NegativeF(BergeError):
    """The bound's radicand is negative, so the bound does not apply."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"f evaluates to {value} < 0; bound inapplicable")


class HypothesisUnmet(BergeError):
    pass


class StabilityViolation(BergeError):
    """The witness selection stalled before reaching t vertices.

    Carries the hypergraph and the partial trace so the instance can be
    dumped as a counterexample report.
    """

    def __init__(self, message, hypergraph=None, context=None, trace=None):
        self.hypergraph = hypergraph
        self.context = context
        self.trace = trace
        super().__init__(message)


class NoConvergence(BergeError):
    """Power iteration hit ``max_iter``; ``result`` holds the best estimate."""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"no convergence after {result.iterations} iterations "
            f"(bounds [{result.lower}, {result.upper}])"
        )


class BudgetExceeded(BergeError):
    """Search budget ran out; ``partial`` holds whatever was computed."""

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)
