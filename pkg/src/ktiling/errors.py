"""Exception hierarchy shared by every module of the package."""


class KTilingError(Exception):
    """Base class for all errors raised by ktiling."""


class PolygonError(KTilingError, ValueError):
    """The vertex list does not describe a centrally symmetric convex polygon."""


class OddVertexCount(PolygonError):
    pass


class TooFewVertices(PolygonError):
    pass


class NotConvex(PolygonError):
    pass


class CollinearVertices(PolygonError):
    pass


class NotCentrallySymmetric(PolygonError):
    pass


class DegenerateBasis(KTilingError, ValueError):
    pass


class AreaMismatch(KTilingError):
    """r * area(P) differs from k * det(L), so no k-fold tiling is possible."""

    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"k*det = {expected} but r*area = {got}")


class NotAVertex(KTilingError, ValueError):
    pass


class WheelChainingFailed(KTilingError):
    pass


class NoValidKappa(KTilingError):
    pass


class InvalidEdge(KTilingError, ValueError):
    pass


class LemmaNotApplicable(KTilingError, ValueError):
    pass


class EmptySearchSpace(KTilingError, ValueError):
    pass


class ParseError(KTilingError, ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class InvariantViolation(KTilingError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
