"""Facet analysis: which cube vertices complete a facet, and how altitudes land.

A facet of the simplex spanned by {0, p_1..p_n} is obtained by dropping one
vertex; ``neighbor_search`` replaces the dropped vertex by every other cube
point, classifies each completed simplex exactly, and records whether the
candidate's orthogonal projection lands on the closed facet.  The searches
are exhaustive over all 2^n vertices so the reports double as instruments
for probing how many face-to-face neighbors a facet admits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bitcore import BinMatrix, BinVector
from .errors import ComponentNotAcuteError, SingularMatrixError
from .exact import bareiss_determinant
from .geometry import (
    Classification,
    Verdict,
    classify,
    project_onto_facet,
    vertex_vector,
)
from .structure import block_triangular_form


def facet_in_cube_facet(facet_vertices: Sequence[BinVector]) -> bool:
    """True iff some coordinate is constant (all 0 or all 1) over the vertices."""
    vertices = list(facet_vertices)
    if not vertices:
        raise ValueError("empty vertex list")
    n = vertices[0].n
    all_ones = ~0
    any_ones = 0
    for v in vertices:
        if v.n != n:
            raise ValueError("vertices of mixed lengths")
        all_ones &= v.bits
        any_ones |= v.bits
    full = (1 << n) - 1
    return (all_ones & full) != 0 or any_ones != full


def facet_vertices(P: BinMatrix, facet: int) -> tuple[BinVector, ...]:
    """The n vertices spanning the facet opposite vertex ``facet``.

    Vertices are labeled 0..n with 0 the origin and k the (k-1)-th column.
    """
    if not P.is_square:
        raise ValueError("matrix must be square")
    n = P.nrows
    if not 0 <= facet <= n:
        raise ValueError(f"facet index must be in 0..{n}, got {facet}")
    return tuple(vertex_vector(P, k) for k in range(n + 1) if k != facet)


def _completion_matrix(P: BinMatrix, facet: int, v: BinVector) -> BinMatrix:
    """Matrix of the simplex obtained by replacing vertex ``facet`` with v."""
    n = P.nrows
    cols = list(P.columns())
    if facet == 0:
        base = cols[0]
        new_cols = [cols[j] ^ base for j in range(1, n)]
        new_cols.append(v ^ base)
        return BinMatrix.from_columns(new_cols)
    cols[facet - 1] = v
    return BinMatrix.from_columns(cols)


@dataclass(frozen=True)
class NeighborCandidate:
    """One tested completion vertex."""

    vertex: BinVector
    classification: Classification
    foot_on_facet: bool
    is_existing: bool

    @property
    def verdict(self) -> Verdict:
        return self.classification.verdict


@dataclass(frozen=True)
class NeighborReport:
    """Exhaustive completion report for one facet."""

    facet: int
    interior: bool
    existing_vertex: BinVector
    candidates: tuple[NeighborCandidate, ...]
    altitude_feet: tuple[BinVector, ...]
    target: str | None = None

    def with_verdict(self, verdict: Verdict) -> tuple[BinVector, ...]:
        return tuple(c.vertex for c in self.candidates if c.verdict is verdict)

    @property
    def matching_vertices(self) -> tuple[BinVector, ...]:
        """Candidates meeting the requested target class (empty if no target)."""
        if self.target is None:
            return ()
        if self.target == "acute":
            return tuple(
                c.vertex for c in self.candidates if c.classification.is_acute
            )
        return tuple(
            c.vertex for c in self.candidates if c.classification.is_nonobtuse
        )


def neighbor_search(
    P: BinMatrix, facet: int, target: str | None = None
) -> NeighborReport:
    """Test every cube vertex as a replacement for the vertex opposite ``facet``.

    All 2^n vertices not spanning the facet are tried (including the vertex
    already there, flagged ``is_existing``).  Each candidate records the exact
    classification of the completed simplex and whether the candidate's
    orthogonal projection onto the facet's affine hull lands on the closed
    facet (all barycentric coordinates >= 0).  ``altitude_feet`` lists the
    candidates that land.
    """
    if target not in (None, "acute", "nonobtuse"):
        raise ValueError(f"target must be 'acute' or 'nonobtuse', got {target!r}")
    if not P.is_square:
        raise ValueError("matrix must be square")
    if bareiss_determinant([list(row) for row in P.to_lists()]) == 0:
        raise SingularMatrixError("matrix does not span a simplex")
    n = P.nrows
    span = facet_vertices(P, facet)
    span_bits = {v.bits for v in span}
    existing = vertex_vector(P, facet)
    interior = not facet_in_cube_facet(span)
    candidates = []
    feet = []
    for bits in range(1 << n):
        if bits in span_bits:
            continue
        v = BinVector(n, bits)
        completed = _completion_matrix(P, facet, v)
        classification = classify(completed)
        projection = project_onto_facet(span, v.to_tuple())
        on_facet = projection.inside
        candidate = NeighborCandidate(
            vertex=v,
            classification=classification,
            foot_on_facet=on_facet,
            is_existing=bits == existing.bits,
        )
        candidates.append(candidate)
        if on_facet:
            feet.append(v)
    return NeighborReport(
        facet=facet,
        interior=interior,
        existing_vertex=existing,
        candidates=tuple(candidates),
        altitude_feet=tuple(feet),
        target=target,
    )


def restricted_antipode(p: BinVector, q: Sequence) -> BinVector:
    """Antipode of p restricted to the coordinates where q is nonzero.

    Coordinate j of the result is 1 - p_j when q_j != 0 and 0 when q_j = 0:
    the antipodal map inside the cube face selected by the support of q.
    """
    entries = [Fraction(x) for x in q]
    if len(entries) != p.n:
        raise ValueError("length mismatch")
    return BinVector.from_entries(
        [(1 - p[j]) if entries[j] else 0 for j in range(p.n)]
    )


def altitude_segment_in_cube(
    span: Sequence[BinVector], v: BinVector
) -> bool | None:
    """Whether the altitude from v to the plane of the facet stays in the cube.

    Returns None when v lies on the plane itself (no altitude), otherwise
    whether the closed segment from v to its orthogonal projection onto the
    plane spanned by the facet is contained in the unit cube.  The segment
    joins v to its foot, so by convexity it suffices that the foot has all
    coordinates in [0, 1].
    """
    point = v.to_tuple()
    projection = project_onto_facet(list(span), point)
    if all(f == x for f, x in zip(projection.foot, point)):
        return None
    return all(0 <= f <= 1 for f in projection.foot)


def count_cube_altitudes(P: BinMatrix, facet: int) -> int:
    """Number of off-plane cube vertices whose altitude segment stays in the cube."""
    span = facet_vertices(P, facet)
    n = P.nrows
    count = 0
    for bits in range(1 << n):
        if altitude_segment_in_cube(span, BinVector(n, bits)):
            count += 1
    return count


def verify_one_neighbor_all_acute_components(P: BinMatrix) -> bool:
    """Check the at-most-one-nonobtuse-completion property facet by facet.

    Requires a nonobtuse matrix whose diagonal blocks all classify acute
    (1x1 blocks do: the edge simplex is formally acute); raises
    ComponentNotAcuteError otherwise.  Returns True iff every interior facet
    admits at most one nonobtuse completion besides the existing vertex.
    """
    form = block_triangular_form(P)
    for block in form.blocks:
        if not classify(block).is_acute:
            raise ComponentNotAcuteError(
                f"diagonal block of size {block.nrows} is not acute"
            )
    n = P.nrows
    for facet in range(n + 1):
        report = neighbor_search(P, facet)
        if not report.interior:
            continue
        fresh = sum(
            1
            for c in report.candidates
            if not c.is_existing and c.classification.is_nonobtuse
        )
        if fresh > 1:
            return False
    return True
