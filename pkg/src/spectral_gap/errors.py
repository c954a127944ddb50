"""Exception hierarchy shared across the package."""


class SpectralGapError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(SpectralGapError, ValueError):
    pass


class SelfLoopError(GraphInputError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdgeError(GraphInputError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRangeError(GraphInputError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex} outside 1..{n}")
        self.vertex, self.n = vertex, n


class PreconditionError(SpectralGapError, ValueError):
    """A graph does not satisfy the structural hypothesis of an operation."""


class DisconnectedGraphError(PreconditionError):
    pass


class BipartiteInputError(PreconditionError):
    pass


class NotBipartiteError(PreconditionError):
    pass


class RegularGraphError(PreconditionError):
    pass


class IsolatedVertexError(PreconditionError):
    pass


class InvalidParamsError(SpectralGapError, ValueError):
    pass


class ZeroVectorError(SpectralGapError, ValueError):
    pass


class LengthMismatchError(SpectralGapError, ValueError):
    def __init__(self, got, expected):
        super().__init__(f"vector has length {got}, graph has {expected} vertices")
        self.got, self.expected = got, expected


class TooLargeForDenseOracleError(SpectralGapError, ValueError):
    def __init__(self, n, cap):
        super().__init__(f"n={n} exceeds dense oracle cap {cap}")
        self.n, self.cap = n, cap


class NoConvergenceError(SpectralGapError, ArithmeticError):
    def __init__(self, max_iter, last_residual):
        super().__init__(
            f"no convergence after {max_iter} iterations "
            f"(last residual {last_residual:.3e})"
        )
        self.max_iter = max_iter
        self.last_residual = last_residual


class GenerationExhaustedError(SpectralGapError, RuntimeError):
    pass


class MalformedLineError(SpectralGapError, ValueError):
    def __init__(self, lineno, line, reason=""):
        msg = f"line {lineno}: malformed {line!r}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.lineno, self.line = lineno, line


class HeaderMismatchError(SpectralGapError, ValueError):
    pass


class BadConfigError(SpectralGapError, ValueError):
    pass
