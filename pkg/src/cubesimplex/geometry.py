"""Classification of 0/1-simplices and the structure of their normal matrices.

A simplex here is the convex hull of the origin and the columns of a
nonsingular 0/1 matrix P.  With B = (P^T P)^-1:

* it is *acute*    iff every off-diagonal entry of B is negative and every
  row sum of B is positive;
* it is *nonobtuse* iff every off-diagonal entry is <= 0 and every row sum
  is >= 0;
* it is *degenerate* iff det P = 0, and *obtuse* otherwise.

The same criteria applied to an n-by-k matrix of edge vectors classify a
k-vertex sub-simplex.  All sign tests run on the integer adjugate of the
Gram matrix, so no division ever happens.

Vertex labels: 0 is the origin and vertex k (1-based) is column k-1 of P.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .bitcore import BinMatrix, BinVector
from .errors import DegenerateFacetError, DependentSubsetError
from .exact import (
    ExactMatrix,
    adjugate_and_determinant,
    bareiss_determinant,
    exact_inverse,
    gram,
    transposed_inverse,
)


class Verdict(enum.Enum):
    DEGENERATE = "degenerate"
    OBTUSE = "obtuse"
    NONOBTUSE = "nonobtuse"
    ACUTE = "acute"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Classification:
    """Verdict plus the first index pair witnessing the decisive criterion.

    For an obtuse simplex the witness is the first positive off-diagonal
    entry of B = (P^T P)^-1 in row-major order, or failing that the first
    (i, i) whose row sum is negative.  For a nonobtuse-but-not-acute
    simplex it is the first zero off-diagonal entry or zero row sum that
    blocks acuteness.  Acute and degenerate classifications carry no
    witness.
    """

    verdict: Verdict
    witness: tuple[int, int] | None = None
    witness_kind: str | None = None

    @property
    def is_nonobtuse(self) -> bool:
        return self.verdict in (Verdict.NONOBTUSE, Verdict.ACUTE)

    @property
    def is_acute(self) -> bool:
        return self.verdict is Verdict.ACUTE


def _classify_gram(G: Sequence[Sequence[int]]) -> Classification:
    """Classify from an integer Gram matrix, via its adjugate (no division)."""
    det = bareiss_determinant(G)
    if det == 0:
        return Classification(Verdict.DEGENERATE)
    if det < 0:
        raise RuntimeError("internal error: Gram determinant must be positive")
    adj, _ = adjugate_and_determinant(G)
    k = len(adj)
    for i in range(k):
        for j in range(k):
            if i != j and adj[i][j] > 0:
                return Classification(Verdict.OBTUSE, (i, j), "off_diagonal")
    row_sums = [sum(adj[i]) for i in range(k)]
    for i in range(k):
        if row_sums[i] < 0:
            return Classification(Verdict.OBTUSE, (i, i), "row_sum")
    for i in range(k):
        for j in range(k):
            if i != j and adj[i][j] == 0:
                return Classification(Verdict.NONOBTUSE, (i, j), "off_diagonal_zero")
    for i in range(k):
        if row_sums[i] == 0:
            return Classification(Verdict.NONOBTUSE, (i, i), "row_sum_zero")
    return Classification(Verdict.ACUTE)


def classify(P: Union[BinMatrix, Sequence[Sequence[int]]]) -> Classification:
    """Classify the simplex spanned by the origin and the columns of P.

    Accepts a rectangular n-by-k matrix too, in which case the k columns
    are edge vectors from a chosen base vertex (see :func:`subsimplex`)
    and the verdict concerns that k-dimensional sub-simplex.  The verdict
    is identical for every matrix representing the same simplex class.
    """
    return _classify_gram(gram(P))


# ---------------------------------------------------------------------------
# normals and the sign/stochastic structure of Q = P^-T
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Normals:
    """Facet normals of the simplex.

    ``inward`` is Q = P^-T; its column j is an inward normal to the facet
    opposite vertex j+1.  ``opposite_origin`` is q = Q e, an outward normal
    to the facet opposite the origin; it satisfies P^T q = e exactly, and
    for a nonobtuse simplex all its entries lie in [0, 1].
    """

    inward: ExactMatrix
    opposite_origin: tuple[Fraction, ...]

    def inward_column(self, j: int) -> tuple[Fraction, ...]:
        return self.inward.column(j)


def normals(P: BinMatrix) -> Normals:
    Q = transposed_inverse(P)
    return Normals(inward=Q, opposite_origin=Q.row_sums())


@dataclass(frozen=True)
class StochasticSplit:
    """Split of Q = P^-T into nonnegative parts Q = positive - negated_negative.

    For an acute simplex the positive part is doubly stochastic and has
    exactly the support of P; for a nonobtuse simplex it is doubly
    substochastic with support contained in P's.
    """

    positive: ExactMatrix
    negated_negative: ExactMatrix

    def reassemble(self) -> ExactMatrix:
        return self.positive - self.negated_negative


def stochastic_split(Q: ExactMatrix) -> StochasticSplit:
    half = Fraction(1, 2)
    absq = Q.abs()
    return StochasticSplit(
        positive=(absq + Q).scaled(half),
        negated_negative=(absq - Q).scaled(half),
    )


@dataclass(frozen=True)
class SignPatternReport:
    """Result of checking the sign pattern of Q = P^-T against P's support.

    In acute mode the check is the full biconditional — P(i,j) = 1 iff
    Q(i,j) > 0 — so zero entries of Q are violations.  In nonobtuse mode
    only the strict-sign implications are checked (Q(i,j) > 0 implies
    P(i,j) = 1, and Q(i,j) < 0 implies P(i,j) = 0); zero entries are
    reported separately and are never violations.
    """

    mode: Verdict
    violations: tuple[tuple[int, int, str], ...]
    zero_entries: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def sign_pattern_check(P: BinMatrix, Q: ExactMatrix | None = None) -> SignPatternReport:
    """Check the sign pattern of the inverse transpose against P.

    ``Q`` defaults to ``transposed_inverse(P)``; when supplied it must
    satisfy Q^T P = I exactly.
    """
    if Q is None:
        Q = transposed_inverse(P)
    else:
        PX = ExactMatrix.from_rows(P.to_lists())
        if not (Q.transpose() @ PX).is_identity():
            raise ValueError("Q is not the inverse transpose of P")
    mode = classify(P).verdict
    strict = mode is Verdict.ACUTE
    violations: list[tuple[int, int, str]] = []
    zeros: list[tuple[int, int]] = []
    n = P.nrows
    for i in range(n):
        for j in range(n):
            qv = Q.entry(i, j)
            pv = P.entry(i, j)
            if qv > 0 and pv == 0:
                violations.append((i, j, "positive_off_support"))
            elif qv < 0 and pv == 1:
                violations.append((i, j, "negative_on_support"))
            elif qv == 0:
                zeros.append((i, j))
                if strict:
                    violations.append((i, j, "zero_entry"))
    return SignPatternReport(mode, tuple(violations), tuple(zeros))


# ---------------------------------------------------------------------------
# vertices, sub-simplices and facet projections
# ---------------------------------------------------------------------------


def vertex_vector(P: BinMatrix, label: int) -> BinVector:
    """Cube vertex for a simplex vertex label: 0 = origin, k = column k-1."""
    if label == 0:
        return BinVector.zero(P.nrows)
    if not 1 <= label <= P.ncols:
        raise ValueError(f"vertex label {label} out of range 0..{P.ncols}")
    return P.column(label - 1)


def subsimplex(
    P: BinMatrix,
    vertex_labels: Iterable[int],
    base: int | None = None,
) -> BinMatrix:
    """Edge-vector matrix of the sub-simplex on a subset of vertices.

    Relative to the base vertex (default: the smallest label) every other
    chosen vertex is XOR-translated, which is exact cube geometry because
    translation by a cube vertex acts coordinatewise as x -> x xor b.
    The result is an n-by-k matrix, k = len(vertex_labels) - 1.  Raises
    DependentSubsetError when the chosen vertices are affinely dependent.
    """
    labels = sorted(set(vertex_labels))
    if len(labels) < 2:
        raise ValueError("need at least two vertex labels")
    if base is None:
        base = labels[0]
    if base not in labels:
        raise ValueError("base must be one of the chosen labels")
    base_vec = vertex_vector(P, base)
    columns = [vertex_vector(P, lab) ^ base_vec for lab in labels if lab != base]
    X = BinMatrix.from_columns(columns)
    if bareiss_determinant(gram(X)) == 0:
        raise DependentSubsetError(f"vertices {labels} are affinely dependent")
    return X


@dataclass(frozen=True)
class FacetProjection:
    """Orthogonal projection of a point onto the affine hull of a facet.

    ``barycentric`` holds the coordinates of the foot with respect to the
    facet vertices (summing to 1); ``inside`` is True when the foot lies in
    the closed facet, i.e. all barycentric coordinates are >= 0.
    """

    barycentric: tuple[Fraction, ...]
    foot: tuple[Fraction, ...]

    @property
    def inside(self) -> bool:
        return all(b >= 0 for b in self.barycentric)


def project_onto_facet(
    facet_vertices: Sequence[BinVector],
    point: BinVector,
) -> FacetProjection:
    """Exact orthogonal projection of a cube vertex onto a facet's hull."""
    if not facet_vertices:
        raise ValueError("empty facet")
    base = facet_vertices[0]
    k = len(facet_vertices)
    n = base.n
    edge = [
        [facet_vertices[j][i] - base[i] for j in range(1, k)] for i in range(n)
    ]
    if k == 1:
        return FacetProjection((Fraction(1),), tuple(Fraction(x) for x in base))
    G = gram(edge)
    if bareiss_determinant(G) == 0:
        raise DegenerateFacetError("facet vertices are affinely dependent")
    rhs = [
        sum(Fraction(edge[i][j]) * (point[i] - base[i]) for i in range(n))
        for j in range(k - 1)
    ]
    Ginv = exact_inverse(G)
    alpha = [
        sum((Ginv.entry(i, j) * rhs[j] for j in range(k - 1)), Fraction(0))
        for i in range(k - 1)
    ]
    bary = (Fraction(1) - sum(alpha, Fraction(0)),) + tuple(alpha)
    foot = tuple(
        Fraction(base[i])
        + sum((alpha[j] * edge[i][j] for j in range(k - 1)), Fraction(0))
        for i in range(n)
    )
    return FacetProjection(bary, foot)
