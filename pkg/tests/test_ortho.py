"""Orthogonal simplices: recognition, enumeration, and tree classification."""

import itertools
import math

import pytest

import oracles
from cubesimplex import golden
from cubesimplex.bitcore import BinMatrix, xor_reflect
from cubesimplex.canon import equivalent
from cubesimplex.errors import (
    DimensionTooLargeError,
    NotOrthogonalError,
    SingularMatrixError,
)
from cubesimplex.ortho import (
    canonical_tree_code,
    enumerate_upper_triangular_ortho,
    is_orthogonal_simplex,
    right_dihedral_count,
    spanning_tree,
    trees_isomorphic,
)

# unlabeled trees on 2..7 nodes
TREE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 11}


# -- recognition ----------------------------------------------------------------


def test_goldens_recognized():
    assert is_orthogonal_simplex(golden.CORNER_3)
    assert is_orthogonal_simplex(golden.PATH_3)
    assert not is_orthogonal_simplex(golden.ACUTE_7)  # acute, one big component
    assert not is_orthogonal_simplex(golden.OBTUSE_5)
    assert not is_orthogonal_simplex(golden.INDECOMPOSABLE_9)
    assert not is_orthogonal_simplex(golden.MIXED_7)  # has a 3-dimensional block


def test_recognition_validation():
    with pytest.raises(ValueError):
        is_orthogonal_simplex(BinMatrix.from_strings(("10", "01", "11")))
    with pytest.raises(SingularMatrixError):
        is_orthogonal_simplex(BinMatrix.from_strings(("110", "110", "001")))


def test_upper_bidiagonal_is_not_orthogonal():
    # columns 100, 110, 011: consecutive columns are not nested, the simplex
    # is obtuse, and in particular not orthogonal (the genuine path simplex
    # is the full upper-triangular matrix of ones)
    M = BinMatrix.from_strings(("110", "011", "001"))
    from cubesimplex.geometry import classify

    assert classify(M).verdict.value == "obtuse"
    assert not is_orthogonal_simplex(M)


# -- enumeration ----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_factorial_counts_all_orthogonal(n):
    mats = enumerate_upper_triangular_ortho(n)
    assert len(mats) == math.factorial(n)
    assert len({m.row_bits for m in mats}) == len(mats)
    for m in mats:
        assert is_orthogonal_simplex(m)


def test_enumeration_shape_is_upper_triangular():
    for m in enumerate_upper_triangular_ortho(4):
        for i in range(4):
            assert m.entry(i, i) == 1
            for j in range(i):
                assert m.entry(i, j) == 0


def test_enumeration_dimension_limits():
    with pytest.raises(DimensionTooLargeError):
        enumerate_upper_triangular_ortho(0)
    with pytest.raises(DimensionTooLargeError):
        enumerate_upper_triangular_ortho(9)


def test_dimension_eight_enumerates_quickly():
    mats = enumerate_upper_triangular_ortho(8)
    assert len(mats) == math.factorial(8)
    for m in mats[:: len(mats) // 20]:
        assert is_orthogonal_simplex(m)


# -- spanning trees ---------------------------------------------------------------


def test_corner_is_a_star():
    tree = spanning_tree(golden.CORNER_3)
    assert tree.node_count == 4
    assert tree.edges == ((0, 1), (0, 2), (0, 3))
    assert tree.degree_sequence == (3, 1, 1, 1)


def test_path_golden_is_a_path():
    tree = spanning_tree(golden.PATH_3)
    assert tree.edges == ((0, 1), (1, 2), (2, 3))
    assert tree.degree_sequence == (2, 2, 1, 1)
    assert not tree.isomorphic(spanning_tree(golden.CORNER_3))


def test_spanning_tree_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonalError):
        spanning_tree(golden.INDECOMPOSABLE_9)
    with pytest.raises(NotOrthogonalError):
        spanning_tree(golden.OBTUSE_5)


def test_tree_code_is_isomorphism_invariant():
    path = canonical_tree_code(4, [(0, 1), (1, 2), (2, 3)])
    relabeled = canonical_tree_code(4, [(3, 2), (2, 0), (0, 1)])
    star = canonical_tree_code(4, [(0, 1), (0, 2), (0, 3)])
    assert path == relabeled
    assert path != star


@pytest.mark.parametrize("n", sorted(TREE_COUNTS))
def test_tree_class_counts(n):
    codes = {spanning_tree(m).code for m in enumerate_upper_triangular_ortho(n)}
    assert len(codes) == TREE_COUNTS[n]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tree_isomorphism_against_bruteforce(n):
    mats = enumerate_upper_triangular_ortho(n)
    trees = [spanning_tree(m) for m in mats]
    for a, b in itertools.combinations(range(len(mats)), 2):
        expected = oracles.trees_isomorphic_bruteforce(
            trees[a].edges, trees[b].edges, n + 1
        )
        assert trees_isomorphic(mats[a], mats[b]) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_equivalence_matches_tree_isomorphism(n):
    """Two orthogonal simplices are equivalent iff their trees are isomorphic."""
    mats = enumerate_upper_triangular_ortho(n)
    for a, b in itertools.combinations(mats, 2):
        assert equivalent(a, b) == trees_isomorphic(a, b)


# -- right dihedral angles ----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_right_dihedral_count_orthogonal(n):
    expected = n * (n - 1) // 2
    for m in enumerate_upper_triangular_ortho(n):
        assert right_dihedral_count(m) == expected


def test_right_dihedral_count_survives_vertex_changes():
    # moving the origin to another vertex keeps the simplex orthogonal and
    # keeps all right dihedral angles in place
    for m in enumerate_upper_triangular_ortho(4)[:6]:
        for column in range(4):
            moved = xor_reflect(m, column)
            assert is_orthogonal_simplex(moved)
            assert right_dihedral_count(moved) == 6


def test_right_dihedral_count_non_orthogonal_is_smaller():
    n = golden.ACUTE_7.nrows
    # an acute simplex has no right dihedral angle at all
    assert right_dihedral_count(golden.ACUTE_7) == 0
    assert right_dihedral_count(golden.MIXED_7) < n * (n + 1) // 2
