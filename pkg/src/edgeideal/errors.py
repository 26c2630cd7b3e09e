"""Exception types shared across the package.

Parse-time problems name the offending element so CLI messages stay usable.
Structural errors (NotUnmixed, NotTwoDimensional, ...) signal legitimate
terminal outcomes of the pipeline, not bugs; InvariantViolation signals bugs.
"""


class EdgeIdealError(Exception):
    pass


class ParseError(EdgeIdealError):
    """Bad input document (schema, labels, edges)."""


class SchemaError(ParseError):
    pass


class EmptyGraphError(ParseError):
    def __init__(self, detail="graph has no edges"):
        super().__init__(detail)


class UnknownLabelError(ParseError):
    def __init__(self, label, side):
        self.label = label
        self.side = side
        super().__init__(f"edge endpoint {label!r} is not a declared {side} vertex")


class DuplicateEdgeError(ParseError):
    def __init__(self, left, right):
        self.edge = (left, right)
        super().__init__(f"edge ({left!r}, {right!r}) listed more than once")


class IsolatedVertexError(ParseError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"vertex {label!r} has no incident edge")


class TooLargeError(EdgeIdealError):
    def __init__(self, what, actual, cap):
        self.what = what
        self.actual = actual
        self.cap = cap
        super().__init__(f"{what}: size {actual} exceeds cap {cap} (pass a larger cap to override)")


class NotUnmixedError(EdgeIdealError):
    def __init__(self, detail):
        super().__init__(detail)


class NotAPosetError(EdgeIdealError):
    def __init__(self, detail):
        super().__init__(detail)


class NotTransitivelyClosedError(EdgeIdealError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"digraph is not transitively closed: missing arc {arc}")


class NotTwoDimensionalError(EdgeIdealError):
    """The incomparability graph admits no transitive orientation."""

    def __init__(self, obstruction):
        self.obstruction = obstruction
        super().__init__(
            "poset has no plane embedding; conflicting incomparable pair "
            f"{obstruction} is forced in both directions"
        )


class InvalidEmbeddingError(EdgeIdealError):
    def __init__(self, pair, detail):
        self.pair = pair
        super().__init__(f"embedding disagrees with order on pair {pair}: {detail}")


class CoordinateTieError(EdgeIdealError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"vertices {pair} cannot be ranked apart")


class NotCohenMacaulayError(EdgeIdealError):
    def __init__(self, detail):
        super().__init__(detail)


class GroebnerTimeoutError(EdgeIdealError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"Groebner basis computation exceeded {budget:g}s budget")


class InvariantViolationError(EdgeIdealError):
    """An internal cross-check failed; indicates a bug, not bad input."""

    def __init__(self, name, detail=""):
        self.name = name
        super().__init__(f"invariant {name!r} violated" + (f": {detail}" if detail else ""))
