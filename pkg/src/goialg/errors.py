"""Exception types shared across the package."""


class GoiError(Exception):
    """Base class for every error raised by goialg."""


class NotDisjoint(GoiError):
    """A union was requested whose operands overlap on domain or image.

    ``witness`` is the overlapping residue class as ``(depth, residue)``
    and ``side`` is ``"domain"`` or ``"image"``.
    """

    def __init__(self, side, witness, message=None):
        self.side = side
        self.witness = witness
        d, r = witness
        super().__init__(
            message or f"{side}s overlap on residue class {r} mod 2^{d}"
        )


class DepthExceeded(GoiError):
    def __init__(self, depth, limit):
        self.depth = depth
        self.limit = limit
        super().__init__(f"piece depth {depth} exceeds limit {limit}")


class TraceDivergence(GoiError):
    """A feedback sum did not reach an empty tail within ``max_iter`` rounds."""

    def __init__(self, iterations):
        self.iterations = iterations
        super().__init__(f"feedback loop still live after {iterations} iterations")


class TypeMismatch(GoiError):
    pass


class UnitHasNoCode(GoiError):
    pass


class ParseError(GoiError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        text = f"{message} at position {position}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(text)


class NonDeterministic(GoiError):
    """Two outgoing edges fired for the same token: the input is not a rook square."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"token from window point {point} can leave by two edges")
