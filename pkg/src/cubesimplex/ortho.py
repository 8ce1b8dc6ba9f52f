"""Orthogonal simplices: recognition, construction, and tree classification.

An orthogonal simplex is a nonobtuse simplex all of whose indecomposable
components are single cube edges.  Such a simplex is determined by how its
edges glue together: the edges form a spanning tree on the n+1 vertices,
and two orthogonal simplices are equivalent exactly when their trees are
isomorphic.  The recursive construction [[P, r], [0, 1]] with r either zero
or an existing column yields n! distinct upper-triangular representations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitcore import BinMatrix
from .errors import DimensionTooLargeError, NotOrthogonalError, SingularMatrixError
from .exact import bareiss_determinant, gram_inverse
from .geometry import classify
from .structure import indecomposable_components

MAX_ORTHO_DIM = 8


def is_orthogonal_simplex(P: BinMatrix) -> bool:
    """True iff P is nonobtuse with all indecomposable components of dimension 1."""
    if not P.is_square:
        raise ValueError("matrix must be square")
    if bareiss_determinant([list(r) for r in P.to_lists()]) == 0:
        raise SingularMatrixError("matrix does not span a simplex")
    if not classify(P).is_nonobtuse:
        return False
    decomposition = indecomposable_components(P)
    return all(c.dimension == 1 for c in decomposition.components)


def enumerate_upper_triangular_ortho(n: int) -> list[BinMatrix]:
    """All n! upper-triangular representations of orthogonal simplices.

    Built recursively: each (k)x(k) matrix P extends to the k+1 matrices
    [[P, r], [0, 1]] where r is the zero column or one of P's columns.
    """
    if not 1 <= n <= MAX_ORTHO_DIM:
        raise DimensionTooLargeError(
            f"upper-triangular enumeration supports dimensions 1..{MAX_ORTHO_DIM},"
            f" got {n}"
        )
    mats = [((1,),)]  # rows as bit tuples of ints, 1x1 one
    for k in range(1, n):
        extended = []
        for rows in mats:
            columns = [tuple(row[j] for row in rows) for j in range(k)]
            for r in [(0,) * k] + columns:
                new_rows = tuple(row + (r[i],) for i, row in enumerate(rows)) + (
                    (0,) * k + (1,),
                )
                extended.append(new_rows)
        mats = extended
    out = [BinMatrix.from_rows(rows) for rows in mats]
    if len({m.row_bits for m in out}) != len(out):
        raise RuntimeError("internal error: recursion produced duplicate matrices")
    return out


@dataclass(frozen=True)
class OrthoTree:
    """Spanning tree of the mutually orthogonal edges of an orthogonal simplex.

    Nodes are the vertex labels 0..n (0 = origin); ``code`` is a canonical
    encoding, equal for two trees exactly when they are isomorphic as
    unlabeled trees.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    code: str

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        degree = {v: 0 for v in range(self.node_count)}
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return tuple(sorted(degree.values(), reverse=True))

    def isomorphic(self, other: "OrthoTree") -> bool:
        return self.node_count == other.node_count and self.code == other.code


def _rooted_code(adjacency: dict[int, list[int]], root: int) -> str:
    def encode(v: int, parent: int) -> str:
        children = sorted(
            encode(w, v) for w in adjacency[v] if w != parent
        )
        return "(" + "".join(children) + ")"

    return encode(root, -1)


def _tree_centers(adjacency: dict[int, list[int]]) -> list[int]:
    nodes = set(adjacency)
    degree = {v: len(adjacency[v]) for v in nodes}
    leaves = [v for v in nodes if degree[v] <= 1]
    remaining = len(nodes)
    while remaining > 2:
        remaining -= len(leaves)
        next_leaves = []
        for leaf in leaves:
            for w in adjacency[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    next_leaves.append(w)
            degree[leaf] = 0
        leaves = next_leaves
    return sorted(v for v in nodes if degree[v] >= 1) or sorted(nodes)


def canonical_tree_code(node_count: int, edges) -> str:
    """Canonical code of an unlabeled tree (equal iff isomorphic)."""
    adjacency: dict[int, list[int]] = {v: [] for v in range(node_count)}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return min(_rooted_code(adjacency, c) for c in _tree_centers(adjacency))


def spanning_tree(P: BinMatrix) -> OrthoTree:
    """The tree formed by the edge components of an orthogonal simplex."""
    if not is_orthogonal_simplex(P):
        raise NotOrthogonalError("matrix does not represent an orthogonal simplex")
    n = P.nrows
    edges = []
    for component in indecomposable_components(P).components:
        (vertex,) = component.vertices
        edges.append(tuple(sorted((component.attachment, vertex))))
    edges.sort()
    seen = set()
    reach = {0}
    for u, v in edges:
        if (u, v) in seen:
            raise RuntimeError("internal error: duplicate tree edge")
        seen.add((u, v))
    # n edges on n+1 nodes: connectivity check makes it a tree
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            if (u in reach) != (v in reach):
                reach.update((u, v))
                changed = True
    if len(reach) != n + 1:
        raise RuntimeError("internal error: component edges do not span the vertices")
    return OrthoTree(
        node_count=n + 1,
        edges=tuple(edges),
        code=canonical_tree_code(n + 1, edges),
    )


def trees_isomorphic(P: BinMatrix, R: BinMatrix) -> bool:
    """Whether two orthogonal simplices have isomorphic edge trees."""
    return spanning_tree(P).isomorphic(spanning_tree(R))


def right_dihedral_count(P: BinMatrix) -> int:
    """Number of right dihedral angles among the (n+1 choose 2) facet pairs.

    With B the inverse Gram matrix, the facets opposite columns i and j meet
    at a right dihedral angle iff B[i][j] = 0, and the facet opposite column
    i is orthogonal to the facet opposite the origin iff row i of B sums to
    zero.
    """
    B = gram_inverse(P)
    n = B.nrows
    count = sum(
        1 for i in range(n) for j in range(i + 1, n) if B.entry(i, j) == 0
    )
    count += sum(1 for s in B.row_sums() if s == 0)
    return count
