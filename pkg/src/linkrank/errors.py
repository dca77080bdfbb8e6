"""Exception hierarchy shared by all ranking modules."""


class LinkRankError(Exception):
    """Base class for data errors raised by linkrank."""


class GraphError(LinkRankError, ValueError):
    """Invalid graph input: empty edge list, self-loop, unknown node."""


class EdgeListError(GraphError):
    """A line of an edge-list document could not be parsed."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class NonFiniteScoreError(LinkRankError, ArithmeticError):
    """An update rule produced NaN or infinity."""

    def __init__(self, node, sweep, value):
        self.node = node
        self.sweep = sweep
        self.value = value
        super().__init__(f"non-finite score {value!r} for node {node} in sweep {sweep}")


class DegenerateVectorError(LinkRankError, ValueError):
    """A score vector collapsed to all zeros and cannot be normalized."""

    def __init__(self, vector):
        self.vector = vector
        super().__init__(f"{vector} vector is all-zero; normalization undefined")
