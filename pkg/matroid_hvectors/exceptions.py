"""Exceptions for matroid-hvectors."""


class MatroidComplexError(Exception):
    """Base exception for matroid-hvectors."""


class EmptyComplexError(MatroidComplexError):
    """A complex was requested with no facets."""


class GhostVertexError(MatroidComplexError):
    """A vertex of {1..n} lies in no facet."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} appears in no facet")
        self.vertex = vertex


class VertexOutOfRangeError(MatroidComplexError):
    """A vertex label lies outside {1..n}."""

    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} is outside 1..{n}")
        self.vertex = vertex
        self.n = n


class EmptyRestrictionError(MatroidComplexError):
    """No nonempty face lies inside the restriction set."""


class NotAFaceError(MatroidComplexError):
    """The given vertex set is not a face of the complex."""


class BadSkeletonDimError(MatroidComplexError):
    """Skeleton dimension outside 0..dim."""


class TooLargeError(MatroidComplexError):
    """Input exceeds the supported size for this operation."""


class WrongDimError(MatroidComplexError):
    """Operation is only defined for a smaller dimension."""


class BadCountError(MatroidComplexError):
    """A count argument must be positive."""


class NotMatroidError(MatroidComplexError):
    """The complex is not a matroid complex."""


class MalformedHVectorError(MatroidComplexError):
    """An h-vector could not be parsed or violates h0 = 1 / nonnegativity."""


class MalformedPartitionError(MatroidComplexError):
    """A partition could not be parsed or is not weakly decreasing and positive."""


class MalformedInputError(MatroidComplexError):
    """Interchange data (JSON, ideal text, settings) failed validation."""


class NotSquarefreeError(MatroidComplexError):
    """A squarefree monomial ideal was required."""


class DimTooHighError(MatroidComplexError):
    """The complex defined by an ideal exceeds the requested dimension."""


class NotArtinianError(MatroidComplexError):
    """The monomial ideal has no pure power of some variable."""


class CrosscheckError(MatroidComplexError):
    """An oracle cross-check disagreed with the library."""

    def __init__(self, message: str, details: str | None = None):
        super().__init__(message)
        self.details = details


class OutputError(MatroidComplexError):
    """Command output could not be written."""
