"""Facet neighbor searches, altitudes, and one-neighbor properties."""

from fractions import Fraction

import pytest

from cubesimplex import golden
from cubesimplex.bitcore import BinMatrix, BinVector
from cubesimplex.errors import ComponentNotAcuteError, SingularMatrixError
from cubesimplex.enumeration import enumerate_classes
from cubesimplex.geometry import Verdict, normals, vertex_vector
from cubesimplex.neighbors import (
    altitude_segment_in_cube,
    count_cube_altitudes,
    facet_in_cube_facet,
    facet_vertices,
    neighbor_search,
    restricted_antipode,
    verify_one_neighbor_all_acute_components,
)


def vec(s: str) -> BinVector:
    return BinVector.from_string(s)


# -- report basics ------------------------------------------------------------


def test_facet_vertices_labels():
    fv = facet_vertices(golden.CORNER_3, 0)
    assert [v.to_tuple() for v in fv] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    fv = facet_vertices(golden.CORNER_3, 2)
    assert [v.to_tuple() for v in fv] == [(0, 0, 0), (1, 0, 0), (0, 0, 1)]


def test_neighbor_search_validation():
    with pytest.raises(ValueError):
        neighbor_search(golden.CORNER_3, 4)
    with pytest.raises(ValueError):
        neighbor_search(golden.CORNER_3, 0, target="best")
    singular = BinMatrix.from_strings(("110", "110", "001"))
    with pytest.raises(SingularMatrixError):
        neighbor_search(singular, 0)


def test_candidates_cover_all_completions():
    report = neighbor_search(golden.CORNER_3, 0)
    assert report.facet == 0
    assert report.existing_vertex == vec("000")
    # replacing the origin: every cube vertex off the facet plane is tested
    tested = {c.vertex.to_string() for c in report.candidates}
    assert tested == {"000", "111", "110", "101", "011"}
    existing = [c for c in report.candidates if c.is_existing]
    assert len(existing) == 1 and existing[0].vertex == vec("000")


def test_corner_nonobtuse_completions():
    report = neighbor_search(golden.CORNER_3, 0, target="nonobtuse")
    matching = {v.to_string() for v in report.matching_vertices}
    assert matching == {"000", "111"}
    fresh = [v for v in report.matching_vertices if v != report.existing_vertex]
    assert len(fresh) == 1  # exactly one true neighbor over that facet


def test_with_verdict_counts():
    # with_verdict matches the exact verdict: the completion by 111 is the
    # regular simplex (acute), the corner itself is nonobtuse-not-acute
    report = neighbor_search(golden.CORNER_3, 0)
    nonobtuse = report.with_verdict(Verdict.NONOBTUSE)
    assert {v.to_string() for v in nonobtuse} == {"000"}
    acute = report.with_verdict(Verdict.ACUTE)
    assert {v.to_string() for v in acute} == {"111"}


# -- interiority ---------------------------------------------------------------


def test_facet_in_cube_facet():
    assert facet_in_cube_facet([vec("10"), vec("11")])  # shares coordinate 1
    assert facet_in_cube_facet([vec("00"), vec("01")])  # shares coordinate 0
    assert not facet_in_cube_facet([vec("10"), vec("01")])


def test_interior_facets_of_acute_golden():
    for facet in range(8):
        assert neighbor_search(golden.ACUTE_7, facet).interior


def test_corner_origin_facet_interior_only():
    flags = [neighbor_search(golden.CORNER_3, k).interior for k in range(4)]
    assert flags == [True, False, False, False]


# -- acute one-neighbor property on the 7x7 golden --------------------------------


def test_acute_golden_neighbor_candidates():
    P = golden.ACUTE_7
    q_all = normals(P)
    for facet in range(8):
        report = neighbor_search(P, facet, target="acute")
        existing = report.existing_vertex
        if facet == 0:
            normal = q_all.opposite_origin
        else:
            normal = q_all.inward_column(facet - 1)
        allowed = {existing.to_string(), restricted_antipode(existing, normal).to_string()}
        got = {v.to_string() for v in report.matching_vertices}
        assert got <= allowed
        fresh_acute = [v for v in report.matching_vertices if v != existing]
        assert len(fresh_acute) <= 1
        fresh_nonobtuse = [
            c
            for c in report.candidates
            if not c.is_existing and c.classification.is_nonobtuse
        ]
        assert len(fresh_nonobtuse) <= 1


# -- restricted antipode -----------------------------------------------------------


def test_restricted_antipode_examples():
    q = (Fraction(1, 2), 0, Fraction(1, 4), 0)
    assert restricted_antipode(vec("1010"), q) == vec("0000")
    assert restricted_antipode(vec("0000"), q) == vec("1010")
    assert restricted_antipode(vec("0110"), q) == vec("1000")


def test_restricted_antipode_involution_on_support():
    q = (1, 0, Fraction(1, 3), 1, 0)
    p = vec("01101")
    twice = restricted_antipode(restricted_antipode(p, q), q)
    # coordinates outside the support of q are zeroed, inside restored
    assert twice == vec("00100")


def test_restricted_antipode_length_mismatch():
    with pytest.raises(ValueError):
        restricted_antipode(vec("10"), (1, 0, 1))


# -- altitudes ----------------------------------------------------------------------


def test_altitude_feet_golden():
    report = neighbor_search(golden.OBTUSE_5, 0)
    assert report.interior
    feet = sorted(v.to_tuple() for v in report.altitude_feet)
    assert feet == sorted(golden.OBTUSE_5_PROJECTING_VERTICES)


def test_altitude_segment_none_on_plane():
    span = facet_vertices(golden.CORNER_3, 0)
    assert altitude_segment_in_cube(span, vec("100")) is None
    assert altitude_segment_in_cube(span, vec("000")) is True


def test_altitude_count_matches_normal_zero_pattern():
    """Interior facet of a nonobtuse simplex: altitude count is 2^(zeros+1).

    For the facet opposite vertex k, the relevant normal is column k-1 of
    the inverse transpose (or its row sums for the origin facet); the
    number of off-plane cube vertices whose altitude segment stays inside
    the cube equals two to the power of one plus the number of zero entries
    of that normal.
    """
    for n in (1, 2, 3, 4):
        for record in enumerate_classes(n, "nonobtuse").classes:
            P = record.matrix
            q_all = normals(P)
            for facet in range(n + 1):
                if not neighbor_search(P, facet).interior:
                    continue
                if facet == 0:
                    normal = q_all.opposite_origin
                else:
                    normal = q_all.inward_column(facet - 1)
                zeros = sum(1 for x in normal if x == 0)
                assert count_cube_altitudes(P, facet) == 2 ** (zeros + 1)


def test_obtuse_golden_breaks_altitude_bound():
    # the interior origin-facet collects four altitude feet, double the
    # at-most-two of the nonobtuse world (its normal has one zero entry,
    # but the simplex is obtuse, so the bound does not apply)
    assert count_cube_altitudes(golden.OBTUSE_5, 0) == 4


# -- one-neighbor over all-acute components ------------------------------------------


def test_one_neighbor_all_acute_components_goldens():
    assert verify_one_neighbor_all_acute_components(golden.CORNER_3)
    assert verify_one_neighbor_all_acute_components(golden.PATH_3)
    assert verify_one_neighbor_all_acute_components(golden.COMPOSITE_8)


def test_one_neighbor_rejects_non_acute_block():
    with pytest.raises(ComponentNotAcuteError):
        verify_one_neighbor_all_acute_components(golden.INDECOMPOSABLE_9)
