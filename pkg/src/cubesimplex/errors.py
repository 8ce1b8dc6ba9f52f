"""Exception hierarchy for cubesimplex.

``CubeSimplexError`` is the common base.  ``AnalysisError`` subclasses
signal that the input matrix fails a mathematical precondition (the CLI
maps them to exit code 1); ``MatrixFormatError`` signals malformed input
text (CLI exit code 2).
"""

from __future__ import annotations


class CubeSimplexError(Exception):
    """Base class for all package-specific errors."""


class AnalysisError(CubeSimplexError):
    """The input is well-formed but violates a mathematical precondition."""


class SingularMatrixError(AnalysisError):
    """The matrix has determinant zero where a nonsingular one is required."""


class NotNonobtuseError(AnalysisError):
    """The simplex is not nonobtuse where nonobtuseness is required."""


class FullyIndecomposableError(AnalysisError):
    """The matrix is fully indecomposable where a decomposition is required."""


class ComponentNotAcuteError(AnalysisError):
    """A decomposition block of dimension > 1 is not acute."""


class DegenerateFacetError(AnalysisError):
    """The facet vertices are affinely dependent."""


class DependentSubsetError(AnalysisError):
    """The chosen vertex subset is affinely dependent."""


class NotOrthogonalError(AnalysisError):
    """The simplex is not an orthogonal simplex."""


class DimensionTooLargeError(AnalysisError):
    """The requested dimension exceeds a documented hard cap."""


class MatrixFormatError(CubeSimplexError):
    """The input text is not a valid 0/1 matrix."""
