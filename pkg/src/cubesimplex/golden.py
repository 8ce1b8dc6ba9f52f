"""Verified example matrices shared by the test suite and the self-check CLI.

Every constant here has been checked against independent exact computation
(cofactor determinants, Fraction Gauss-Jordan inverses, brute-force orbit
closures).  Names describe what each matrix is, not where it comes from.
"""

from __future__ import annotations

from fractions import Fraction

from .bitcore import BinMatrix, ColPerm, Operation, Reflect, RowPerm

# 7x7 acute matrix: transposed inverse has doubly stochastic positive part,
# but the transpose matrix itself is not acute.
ACUTE_7 = BinMatrix.from_rows(
    [
        (1, 1, 1, 0, 0, 1, 1),
        (1, 0, 0, 1, 1, 0, 0),
        (0, 1, 0, 1, 1, 0, 0),
        (0, 0, 1, 1, 1, 1, 0),
        (0, 0, 1, 1, 1, 0, 1),
        (0, 0, 0, 1, 0, 1, 1),
        (0, 0, 0, 0, 1, 1, 1),
    ]
)

ACUTE_7_SCALE = 13
ACUTE_7_INVERSE_T_NUMERATORS = (
    (4, 4, 3, -2, -2, 1, 1),
    (9, -4, -3, 2, 2, -1, -1),
    (-4, 9, -3, 2, 2, -1, -1),
    (-2, -2, 5, 1, 1, 6, -7),
    (-2, -2, 5, 1, 1, -7, 6),
    (-1, -1, -4, 7, -6, 3, 3),
    (-1, -1, -4, -6, 7, 3, 3),
)

# 7x7 partly decomposable nonobtuse matrix with fine block sizes
# [1, 1, 1, 1, 3]; the support of the positive part of its transposed
# inverse is a strict subset of the support of the matrix itself.
MIXED_7 = BinMatrix.from_rows(
    [
        (1, 1, 0, 0, 1, 1, 1),
        (0, 1, 0, 0, 1, 1, 1),
        (0, 0, 1, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 1, 0),
        (0, 0, 0, 0, 1, 0, 1),
        (0, 0, 0, 0, 0, 1, 1),
    ]
)

MIXED_7_SCALE = 2
MIXED_7_INVERSE_T_NUMERATORS = (
    (2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0),
    (0, 0, 2, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0),
    (0, -1, 0, 0, 1, 1, -1),
    (0, -1, 0, 0, 1, -1, 1),
    (0, -1, 0, 0, -1, 1, 1),
)

# Five-matrix transformation chain starting at MIXED_7: reflecting through
# the second vertex produces a block diagonal matrix; a row swap reduces the
# top block; reflecting through the sixth vertex destroys the zero block;
# one simultaneous row/column swap lands on the matrix obtained from the
# start by reflecting through the sixth vertex directly.
REFLECT_CHAIN_7 = (
    MIXED_7,
    BinMatrix.from_rows(
        [
            (0, 1, 1, 1, 0, 0, 0),
            (1, 1, 1, 1, 0, 0, 0),
            (0, 0, 1, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0, 0),
            (0, 0, 0, 0, 1, 1, 0),
            (0, 0, 0, 0, 1, 0, 1),
            (0, 0, 0, 0, 0, 1, 1),
        ]
    ),
    BinMatrix.from_rows(
        [
            (1, 1, 1, 1, 0, 0, 0),
            (0, 1, 1, 1, 0, 0, 0),
            (0, 0, 1, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0, 0),
            (0, 0, 0, 0, 1, 1, 0),
            (0, 0, 0, 0, 1, 0, 1),
            (0, 0, 0, 0, 0, 1, 1),
        ]
    ),
    BinMatrix.from_rows(
        [
            (1, 1, 1, 1, 0, 0, 0),
            (0, 1, 1, 1, 0, 0, 0),
            (0, 0, 1, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0, 0),
            (1, 1, 1, 1, 0, 1, 1),
            (0, 0, 0, 0, 1, 0, 1),
            (1, 1, 1, 1, 1, 1, 0),
        ]
    ),
    BinMatrix.from_rows(
        [
            (0, 0, 1, 1, 0, 1, 0),
            (1, 0, 1, 1, 0, 1, 0),
            (0, 0, 1, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0, 0),
            (1, 1, 1, 1, 0, 1, 1),
            (0, 0, 0, 0, 1, 0, 1),
            (1, 1, 1, 1, 1, 1, 0),
        ]
    ),
)

_SWAP01 = (1, 0, 2, 3, 4, 5, 6)
_SWAP15 = (0, 5, 2, 3, 4, 1, 6)

REFLECT_CHAIN_7_OPS: tuple[tuple[Operation, ...], ...] = (
    (Reflect(1),),
    (RowPerm(_SWAP01),),
    (Reflect(5),),
    (RowPerm(_SWAP01), ColPerm(_SWAP15)),
)

# 8x8 nonobtuse matrix made of three indecomposable components of
# dimensions 3, 1, and 4: a simplicial complex glued at two vertices.
COMPOSITE_8 = BinMatrix.from_rows(
    [
        (1, 1, 0, 0, 0, 0, 0, 0),
        (1, 0, 1, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 0),
        (0, 0, 0, 0, 1, 1, 0, 1),
        (0, 0, 0, 0, 1, 0, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 1),
    ]
)

# 9x9 fully indecomposable nonobtuse matrix that is NOT acute: the normal
# to the facet opposite the origin has zero entries, while every other
# facet normal has none.
INDECOMPOSABLE_9 = BinMatrix.from_rows(
    [
        (1, 1, 0, 0, 1, 1, 1, 1, 0),
        (1, 0, 1, 1, 1, 0, 0, 1, 1),
        (1, 0, 1, 1, 0, 1, 1, 0, 1),
        (0, 1, 1, 1, 1, 0, 1, 0, 1),
        (0, 1, 1, 1, 0, 1, 0, 1, 1),
        (0, 0, 1, 1, 1, 1, 1, 1, 0),
        (0, 0, 1, 0, 1, 1, 0, 0, 1),
        (0, 0, 1, 0, 0, 0, 1, 1, 1),
        (0, 0, 0, 1, 1, 1, 1, 1, 1),
    ]
)

INDECOMPOSABLE_9_SCALE = 20
INDECOMPOSABLE_9_INVERSE_T_NUMERATORS = (
    (6, 6, -2, -6, 2, 2, 2, 2, -2),
    (7, -3, 1, 3, 4, -6, -6, 4, 1),
    (7, -3, 1, 3, -6, 4, 4, -6, 1),
    (-3, 7, 1, 3, 4, -6, 4, -6, 1),
    (-3, 7, 1, 3, -6, 4, -6, 4, 1),
    (-4, -4, 8, 4, 2, 2, 2, 2, -12),
    (-2, -2, 4, -8, 6, 6, -4, -4, 4),
    (-2, -2, 4, -8, -4, -4, 6, 6, 4),
    (-4, -4, -12, 4, 2, 2, 2, 2, 8),
)

INDECOMPOSABLE_9_OPPOSITE_NORMAL = tuple(
    Fraction(x, 20) for x in (10, 5, 5, 5, 5, 0, 0, 0, 0)
)

# 5x5 matrix of an obtuse simplex: four cube vertices project orthogonally
# onto the closed facet opposite the origin, two more than any nonobtuse
# simplex would allow.
OBTUSE_5 = BinMatrix.from_rows(
    [
        (1, 1, 1, 0, 0),
        (1, 1, 0, 1, 0),
        (1, 0, 0, 0, 1),
        (0, 0, 1, 1, 0),
        (0, 1, 1, 0, 1),
    ]
)

OBTUSE_5_PROJECTING_VERTICES = (
    (0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1),
    (1, 0, 0, 0, 0),
    (1, 1, 1, 1, 1),
)

# Four matrix representations of one and the same tetrahedron.
TETRAHEDRON_REPS_3 = (
    BinMatrix.from_rows([(0, 0, 1), (1, 1, 0), (1, 0, 0)]),
    BinMatrix.from_rows([(1, 1, 0), (0, 1, 0), (0, 0, 1)]),
    BinMatrix.from_rows([(1, 0, 1), (0, 1, 0), (0, 0, 1)]),
    BinMatrix.from_rows([(0, 1, 1), (0, 1, 0), (1, 1, 1)]),
)

# The regular tetrahedron in the 3-cube (acute) and the matrix obtained by
# replacing its first column with the antipode (nonobtuse, positive Gram).
REGULAR_3 = BinMatrix.from_rows([(0, 1, 1), (1, 0, 1), (1, 1, 0)])
REGULAR_3_ANTIPODAL_COLUMN = BinMatrix.from_rows(
    [(1, 1, 1), (0, 0, 1), (0, 1, 0)]
)

# Corner simplex (all edges at the origin) and path simplex (edges chained)
# in dimension 3: the two orthogonal classes there.
CORNER_3 = BinMatrix.identity(3)
PATH_3 = BinMatrix.from_rows([(1, 1, 1), (0, 1, 1), (0, 0, 1)])


def scaled_inverse_transpose(
    numerators: tuple[tuple[int, ...], ...], scale: int
) -> tuple[tuple[Fraction, ...], ...]:
    """The pinned integer matrix divided by its scale, as exact fractions."""
    return tuple(tuple(Fraction(x, scale) for x in row) for row in numerators)
