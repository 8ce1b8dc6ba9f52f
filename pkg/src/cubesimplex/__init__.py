"""Exact analysis of 0/1-simplices: simplices spanned by the origin and n
linearly independent vertices of the unit cube.

The package classifies such simplices (acute / nonobtuse / obtuse /
degenerate), analyses the sign and stochastic structure of their inverse
transposes, decomposes nonobtuse ones into fully indecomposable blocks,
canonicalizes and enumerates equivalence classes, searches facet
neighborhoods, and recognizes orthogonal (right-angled) simplices.  All
arithmetic is exact.
"""

from __future__ import annotations

from .bitcore import (
    BinMatrix,
    BinVector,
    ColPerm,
    Reflect,
    RowPerm,
    antipode,
    apply_op,
    apply_ops,
    permute,
    xor_reflect,
)
from .errors import (
    AnalysisError,
    ComponentNotAcuteError,
    CubeSimplexError,
    DegenerateFacetError,
    DependentSubsetError,
    DimensionTooLargeError,
    FullyIndecomposableError,
    MatrixFormatError,
    NotNonobtuseError,
    NotOrthogonalError,
    SingularMatrixError,
)
from .exact import (
    ExactMatrix,
    bareiss_determinant,
    determinant,
    exact_inverse,
    gram,
    gram_inverse,
    transposed_inverse,
)
from .geometry import (
    Classification,
    Verdict,
    classify,
    normals,
    project_onto_facet,
    sign_pattern_check,
    stochastic_split,
    subsimplex,
    vertex_vector,
)
from .structure import (
    BlockTriangularForm,
    Component,
    ComponentDecomposition,
    antipodal_replace,
    block_diagonalize,
    block_triangular_form,
    find_partition_witness,
    indecomposable_components,
    is_fully_indecomposable,
)
from .canon import CanonicalForm, canonical_form, canonical_key, equivalent
from .enumeration import (
    ClassRecord,
    EnumerationResult,
    PROPERTY_CHECKS,
    SweepReport,
    enumerate_classes,
    sweep_verify,
)
from .neighbors import (
    NeighborCandidate,
    NeighborReport,
    altitude_segment_in_cube,
    count_cube_altitudes,
    neighbor_search,
    restricted_antipode,
    verify_one_neighbor_all_acute_components,
)
from .ortho import (
    OrthoTree,
    canonical_tree_code,
    enumerate_upper_triangular_ortho,
    is_orthogonal_simplex,
    right_dihedral_count,
    spanning_tree,
    trees_isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "BinMatrix",
    "BinVector",
    "BlockTriangularForm",
    "CanonicalForm",
    "ClassRecord",
    "Classification",
    "ColPerm",
    "Component",
    "ComponentDecomposition",
    "ComponentNotAcuteError",
    "CubeSimplexError",
    "DegenerateFacetError",
    "DependentSubsetError",
    "DimensionTooLargeError",
    "EnumerationResult",
    "ExactMatrix",
    "FullyIndecomposableError",
    "MatrixFormatError",
    "NeighborCandidate",
    "NeighborReport",
    "NotNonobtuseError",
    "NotOrthogonalError",
    "OrthoTree",
    "PROPERTY_CHECKS",
    "Reflect",
    "RowPerm",
    "SingularMatrixError",
    "SweepReport",
    "Verdict",
    "antipodal_replace",
    "antipode",
    "altitude_segment_in_cube",
    "apply_op",
    "apply_ops",
    "bareiss_determinant",
    "block_diagonalize",
    "block_triangular_form",
    "canonical_form",
    "canonical_key",
    "canonical_tree_code",
    "classify",
    "count_cube_altitudes",
    "determinant",
    "enumerate_classes",
    "enumerate_upper_triangular_ortho",
    "equivalent",
    "exact_inverse",
    "find_partition_witness",
    "gram",
    "gram_inverse",
    "indecomposable_components",
    "is_fully_indecomposable",
    "is_orthogonal_simplex",
    "neighbor_search",
    "normals",
    "permute",
    "project_onto_facet",
    "restricted_antipode",
    "right_dihedral_count",
    "sign_pattern_check",
    "spanning_tree",
    "stochastic_split",
    "subsimplex",
    "sweep_verify",
    "transposed_inverse",
    "trees_isomorphic",
    "verify_one_neighbor_all_acute_components",
    "vertex_vector",
    "xor_reflect",
    "__version__",
]
