"""Decomposability structure of nonobtuse 0/1-simplices.

A square 0/1 matrix is *partly decomposable* when some a-by-b all-zero
submatrix with a + b = n can be isolated by independent row and column
sets; otherwise it is *fully indecomposable*.  A nonobtuse simplex's
matrix can always be brought to block upper triangular form whose
diagonal blocks are fully indecomposable and where the strip above each
block consists of identical columns — each equal to a column of the
matrix to its upper left, or zero.  Reflecting at that column splits the
bottom block off, which is how a nonobtuse simplex decomposes into
mutually orthogonal indecomposable components glued at shared vertices.

Witness search runs on a bipartite matching (Hall/Koenig) plus strongly
connected components, so it is polynomial; the brute-force subset scan
lives only in the test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitcore import BinMatrix, BinVector, ColPerm, Operation, Reflect, RowPerm, permute, xor_reflect
from .errors import FullyIndecomposableError, NotNonobtuseError
from .geometry import Verdict, classify


# ---------------------------------------------------------------------------
# bipartite matching and the decomposability witness
# ---------------------------------------------------------------------------


def _column_supports(A: BinMatrix) -> list[list[int]]:
    return [
        [i for i in range(A.nrows) if A.entry(i, j)] for j in range(A.ncols)
    ]


def _max_matching(col_rows: list[list[int]], nrows: int) -> tuple[list[int], list[int]]:
    """Deterministic Kuhn augmenting-path matching.

    Columns are processed in ascending order and rows tried in ascending
    order, so the matching is reproducible.  Returns (col_match, row_match)
    with -1 for unmatched.
    """
    ncols = len(col_rows)
    col_match = [-1] * ncols
    row_match = [-1] * nrows

    def try_augment(j: int, visited: list[bool]) -> bool:
        for i in col_rows[j]:
            if visited[i]:
                continue
            visited[i] = True
            if row_match[i] == -1 or try_augment(row_match[i], visited):
                col_match[j] = i
                row_match[i] = j
                return True
        return False

    for j in range(ncols):
        try_augment(j, [False] * nrows)
    return col_match, row_match


@dataclass(frozen=True)
class PartitionWitness:
    """Row and column indicator vectors isolating an all-zero submatrix.

    ``rows.ones() + cols.ones() = n``, both nonempty, and every entry of
    the matrix in the selected rows and columns is zero — the certificate
    that the matrix is partly decomposable.
    """

    rows: BinVector
    cols: BinVector

    def row_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows.support()))

    def col_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.cols.support()))


def _indicator(n: int, indices) -> BinVector:
    bits = 0
    for i in indices:
        bits |= 1 << (n - 1 - i)
    return BinVector(n, bits)


def _scc_partition(adj: list[list[int]]) -> list[list[int]]:
    """Strongly connected components, Tarjan (iterative), deterministic.

    Components are emitted in reverse topological order: every component
    appears before any component that can reach it, so the first emitted
    component is always a sink of the condensation.
    """
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def find_partition_witness(A: BinMatrix) -> PartitionWitness | None:
    """A zero-submatrix witness of partial decomposability, or None.

    Strategy: if the support has no perfect matching, a Koenig cover of a
    maximum matching yields the witness; otherwise relabel rows along a
    perfect matching (putting ones on the diagonal) and look for a closed
    vertex set in the column-dependency digraph — the matrix is fully
    indecomposable iff that digraph is strongly connected.
    """
    if not A.is_square:
        raise ValueError("decomposability is defined for square matrices")
    n = A.nrows
    if n == 1:
        # A 1x1 matrix has no nonempty proper row/column split at all.
        return None
    col_rows = _column_supports(A)
    col_match, row_match = _max_matching(col_rows, n)
    if any(m == -1 for m in col_match):
        # Koenig: alternate from unmatched columns; non-reached rows times
        # reached columns is an all-zero block of total size > n.
        reached_cols = {j for j in range(n) if col_match[j] == -1}
        reached_rows: set[int] = set()
        frontier = list(reached_cols)
        while frontier:
            j = frontier.pop()
            for i in col_rows[j]:
                if i in reached_rows:
                    continue
                reached_rows.add(i)
                jj = row_match[i]
                if jj != -1 and jj not in reached_cols:
                    reached_cols.add(jj)
                    frontier.append(jj)
        zero_rows = sorted(set(range(n)) - reached_rows)
        zero_cols = sorted(reached_cols)
        a = max(n - len(zero_cols), 1)
        b = n - a
        return PartitionWitness(
            rows=_indicator(n, zero_rows[:a]),
            cols=_indicator(n, zero_cols[:b]),
        )
    # Perfect matching: B[j][k] = A[match(j)][k] has a unit diagonal, and
    # A is partly decomposable iff B is reducible.
    adj = [
        sorted(k for k in range(n) if k != j and A.entry(col_match[j], k))
        for j in range(n)
    ]
    comps = _scc_partition(adj)
    if len(comps) == 1:
        return None
    sink = comps[0]  # first emitted component is a sink: no outgoing edges
    rows = sorted(col_match[j] for j in sink)
    cols = sorted(set(range(n)) - set(sink))
    return PartitionWitness(rows=_indicator(n, rows), cols=_indicator(n, cols))


def is_fully_indecomposable(A: BinMatrix) -> bool:
    """True when no zero submatrix witness exists (see find_partition_witness)."""
    return find_partition_witness(A) is None


# ---------------------------------------------------------------------------
# block triangular form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Strip:
    """The rank-one strip above a diagonal block.

    Every column of the strip equals ``column`` (possibly zero).  When
    nonzero, ``column`` coincides with the column of the block-triangular
    matrix at position ``source_position`` (truncated to the strip's rows),
    and ``source_vertex`` is that column's original 1-based vertex label;
    a zero strip attaches the block to the origin (source_vertex 0).
    """

    column: BinVector
    source_position: int | None
    source_vertex: int


@dataclass(frozen=True)
class BlockTriangularForm:
    """Result of the block upper triangularization of a nonobtuse matrix.

    ``matrix`` = permute(P, row_perm, col_perm) is block upper triangular;
    ``blocks`` are its fully indecomposable diagonal blocks top to bottom;
    ``block_columns``/``block_rows`` give the original 0-based indices each
    block occupies; ``strips[b]`` describes the columns above block b
    (``strips[0]`` is None).
    """

    matrix: BinMatrix
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    blocks: tuple[BinMatrix, ...]
    block_columns: tuple[tuple[int, ...], ...]
    block_rows: tuple[tuple[int, ...], ...]
    strips: tuple[Strip | None, ...]

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(b.nrows for b in self.blocks)

    def attachment_vertices(self) -> tuple[int, ...]:
        """Vertex label each block is glued at: 0 = origin."""
        out = []
        for b, strip in enumerate(self.strips):
            out.append(0 if strip is None else strip.source_vertex)
        return tuple(out)


def block_triangular_form(P: BinMatrix) -> BlockTriangularForm:
    """Bring a nonobtuse matrix to block upper triangular form.

    Deterministic: among the condensation's currently available sinks the
    block with the largest original column index is placed bottom-most;
    within each block, columns and rows keep ascending original order.
    Raises NotNonobtuseError for matrices that are not nonobtuse (the
    strip structure is only guaranteed there); violations of the
    guaranteed structure itself raise RuntimeError, since they would mean
    an internal bug rather than bad input.
    """
    verdict = classify(P)
    if not verdict.is_nonobtuse:
        raise NotNonobtuseError(f"matrix is {verdict.verdict.value}, not nonobtuse")
    n = P.nrows
    col_rows = _column_supports(P)
    col_match, _ = _max_matching(col_rows, n)
    if any(m == -1 for m in col_match):
        raise RuntimeError("internal error: nonsingular matrix without perfect matching")
    adj = [
        sorted(k for k in range(n) if k != j and P.entry(col_match[j], k))
        for j in range(n)
    ]
    comps = _scc_partition(adj)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    out_edges: list[set[int]] = [set() for _ in comps]
    for j in range(n):
        for k in adj[j]:
            if comp_of[j] != comp_of[k]:
                out_edges[comp_of[j]].add(comp_of[k])
    placed: list[int] = []  # component ids, bottom-up
    remaining = set(range(len(comps)))
    while remaining:
        sinks = [
            ci for ci in remaining if not (out_edges[ci] & remaining)
        ]
        chosen = max(sinks, key=lambda ci: max(comps[ci]))
        placed.append(chosen)
        remaining.discard(chosen)
    order = [comps[ci] for ci in reversed(placed)]  # top to bottom

    col_perm = tuple(j for comp in order for j in comp)
    row_perm = tuple(
        i for comp in order for i in sorted(col_match[j] for j in comp)
    )
    matrix = permute(P, row_perm=row_perm, col_perm=col_perm)

    blocks: list[BinMatrix] = []
    block_cols: list[tuple[int, ...]] = []
    block_rows: list[tuple[int, ...]] = []
    strips: list[Strip | None] = []
    start = 0
    for comp in order:
        size = len(comp)
        stop = start + size
        block = BinMatrix.from_rows(
            [[matrix.entry(i, j) for j in range(start, stop)] for i in range(start, stop)]
        )
        # below-block entries must vanish in a block *upper* triangular form
        for i in range(stop, n):
            for j in range(start, stop):
                if matrix.entry(i, j):
                    raise RuntimeError("internal error: nonzero entry below a block")
        if size == 2:
            raise RuntimeError("internal error: no 2x2 block can be fully indecomposable")
        if find_partition_witness(block) is not None:
            raise RuntimeError("internal error: diagonal block is not fully indecomposable")
        blocks.append(block)
        block_cols.append(tuple(comp))
        block_rows.append(tuple(sorted(col_match[j] for j in comp)))
        if start == 0:
            strips.append(None)
        else:
            strip_cols = [
                BinVector.from_entries(
                    [matrix.entry(i, j) for i in range(start)]
                )
                for j in range(start, stop)
            ]
            if any(c != strip_cols[0] for c in strip_cols):
                raise RuntimeError("internal error: strip columns above a block differ")
            nu = strip_cols[0]
            if nu.is_zero():
                strips.append(Strip(nu, None, 0))
            else:
                matches = [
                    j
                    for j in range(start)
                    if all(matrix.entry(i, j) == nu[i] for i in range(start))
                    and all(matrix.entry(i, j) == 0 for i in range(start, n))
                ]
                if len(matches) != 1:
                    raise RuntimeError(
                        "internal error: strip column must match exactly one left column"
                    )
                pos = matches[0]
                strips.append(Strip(nu, pos, col_perm[pos] + 1))
        start = stop
    return BlockTriangularForm(
        matrix=matrix,
        row_perm=row_perm,
        col_perm=col_perm,
        blocks=tuple(blocks),
        block_columns=tuple(block_cols),
        block_rows=tuple(block_rows),
        strips=tuple(strips),
    )


def block_diagonalize(P: BinMatrix) -> tuple[BinMatrix, tuple[Operation, ...]]:
    """Split the bottom fully indecomposable block off by one reflection.

    Returns the transformed matrix and the operations applied (permutations
    to reach block triangular form, then at most one xor_reflect at the
    strip's source column).  The result has a zero strip above its bottom
    block.  Raises FullyIndecomposableError when there is nothing to split
    and NotNonobtuseError when P is not nonobtuse.
    """
    witness = find_partition_witness(P)
    if witness is None:
        raise FullyIndecomposableError("matrix is fully indecomposable")
    form = block_triangular_form(P)
    ops: list[Operation] = []
    matrix = P
    identity = tuple(range(P.nrows))
    if form.row_perm != identity or form.col_perm != identity:
        if form.row_perm != identity:
            ops.append(RowPerm(form.row_perm))
        if form.col_perm != identity:
            ops.append(ColPerm(form.col_perm))
        matrix = form.matrix
    last_strip = form.strips[-1]
    if last_strip is not None and last_strip.source_position is not None:
        ops.append(Reflect(last_strip.source_position))
        matrix = xor_reflect(matrix, last_strip.source_position)
    # verify the split: strip above the bottom block is now zero
    size = form.blocks[-1].nrows
    n = matrix.nrows
    for i in range(n - size):
        for j in range(n - size, n):
            if matrix.entry(i, j):
                raise RuntimeError("internal error: bottom block failed to split off")
    return matrix, tuple(ops)


# ---------------------------------------------------------------------------
# indecomposable components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One fully indecomposable component of a nonobtuse simplex.

    ``vertices`` are the 1-based labels of the columns spanning it and
    ``attachment`` is the vertex (0 = origin) it is glued at; its own
    simplex is the hull of the attachment vertex and the columns.
    """

    matrix: BinMatrix
    vertices: tuple[int, ...]
    attachment: int

    @property
    def dimension(self) -> int:
        return self.matrix.nrows


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Component, ...]

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(c.dimension for c in self.components)

    def meeting_count(self, vertex: int) -> int:
        """Number of components whose simplex contains the given vertex."""
        return sum(
            1
            for c in self.components
            if vertex == c.attachment or vertex in c.vertices
        )

    def meeting_counts(self) -> dict[int, int]:
        labels = {0}
        for c in self.components:
            labels.update(c.vertices)
            labels.add(c.attachment)
        return {v: self.meeting_count(v) for v in sorted(labels)}


def indecomposable_components(P: BinMatrix) -> ComponentDecomposition:
    """Decompose a nonobtuse simplex into its indecomposable components."""
    form = block_triangular_form(P)
    attach = form.attachment_vertices()
    comps = [
        Component(
            matrix=block,
            vertices=tuple(j + 1 for j in cols),
            attachment=attach[b],
        )
        for b, (block, cols) in enumerate(zip(form.blocks, form.block_columns))
    ]
    return ComponentDecomposition(tuple(comps))


def antipodal_replace(P: BinMatrix, j: int) -> BinMatrix:
    """Replace column j by its antipode (entrywise complement)."""
    if not 0 <= j < P.ncols:
        raise ValueError(f"column {j} out of range")
    cols = P.columns()
    cols[j] = cols[j].antipode()
    return BinMatrix.from_columns(cols)
