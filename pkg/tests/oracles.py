"""Independent brute-force reference implementations.

Everything in this module is deliberately naive and self-contained (stdlib
only, exact arithmetic via ``fractions.Fraction``).  The package under test
is never imported here: these functions are the oracles that expected values
in the test suite were frozen from, and they double as property-test
references for small sizes.

Conventions match the package: a simplex is given by an n-by-n 0/1 matrix
whose columns are the nonzero vertices (the origin is always vertex 0);
matrices are tuples of row tuples; a vertex is encoded as an integer whose
bit (n-1-i) holds coordinate i (row-major, MSB first).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# exact linear algebra (naive)
# ---------------------------------------------------------------------------


def det_cofactor(rows) -> Fraction:
    """Determinant by recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [
            [rows[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * det_cofactor(minor)
    return total


def inverse(rows) -> list[list[Fraction]]:
    """Matrix inverse by Gauss-Jordan elimination over Fraction.

    Raises ZeroDivisionError if the matrix is singular.
    """
    n = len(rows)
    aug = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_mul(a, b) -> list[list[Fraction]]:
    return [
        [
            sum((Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(len(b))),
                Fraction(0))
            for j in range(len(b[0]))
        ]
        for i in range(len(a))
    ]


def transpose(rows) -> Matrix:
    return tuple(zip(*rows))


def gram(rows) -> list[list[int]]:
    n = len(rows)
    k = len(rows[0])
    return [
        [sum(rows[r][i] * rows[r][j] for r in range(n)) for j in range(k)]
        for i in range(k)
    ]


# ---------------------------------------------------------------------------
# classification (naive, straight from the defining inequalities)
# ---------------------------------------------------------------------------


def classify(rows) -> str:
    """Verdict of the simplex spanned by the columns of ``rows``.

    Works for rectangular n-by-k matrices too (k independent columns).
    Returns one of "degenerate", "obtuse", "nonobtuse", "acute".
    """
    g = gram(rows)
    if det_cofactor(g) == 0:
        return "degenerate"
    b = inverse(g)
    k = len(g)
    strict = True
    for i in range(k):
        for j in range(k):
            if i != j:
                if b[i][j] > 0:
                    return "obtuse"
                if b[i][j] == 0:
                    strict = False
    for i in range(k):
        s = sum(b[i])
        if s < 0:
            return "obtuse"
        if s == 0:
            strict = False
    return "acute" if strict else "nonobtuse"


# ---------------------------------------------------------------------------
# bit-vector helpers
# ---------------------------------------------------------------------------


def cols_to_rows(cols: tuple[int, ...], n: int) -> Matrix:
    """Rows of the matrix whose columns are the encoded vertices ``cols``."""
    return tuple(
        tuple((c >> (n - 1 - i)) & 1 for c in cols) for i in range(n)
    )


def rows_to_cols(rows) -> tuple[int, ...]:
    n = len(rows)
    return tuple(
        sum(rows[i][j] << (n - 1 - i) for i in range(n))
        for j in range(len(rows[0]))
    )


def permute_bits(value: int, perm: tuple[int, ...], n: int) -> int:
    """Coordinate permutation: new coordinate i = old coordinate perm[i]."""
    out = 0
    for i in range(n):
        if (value >> (n - 1 - perm[i])) & 1:
            out |= 1 << (n - 1 - i)
    return out


# ---------------------------------------------------------------------------
# the equivalence group, definitionally (matrix-orbit closure)
# ---------------------------------------------------------------------------


def _apply_col_perm(rows: Matrix, perm) -> Matrix:
    return tuple(tuple(row[p] for p in perm) for row in rows)


def _apply_row_perm(rows: Matrix, perm) -> Matrix:
    return tuple(rows[p] for p in perm)


def _apply_reflect(rows: Matrix, c: int) -> Matrix:
    # XOR column c into every other column; column c itself is unchanged.
    out = []
    for row in rows:
        if row[c]:
            out.append(tuple(b ^ 1 if j != c else b for j, b in enumerate(row)))
        else:
            out.append(row)
    return tuple(out)


def orbit_matrices(rows: Matrix) -> frozenset[Matrix]:
    """Closure of a matrix under column perms, row perms and reflections."""
    n = len(rows)
    perms = list(itertools.permutations(range(n)))
    seen = {tuple(rows)}
    frontier = [tuple(rows)]
    while frontier:
        new_frontier = []
        for m in frontier:
            images = []
            for p in perms:
                images.append(_apply_col_perm(m, p))
                images.append(_apply_row_perm(m, p))
            for c in range(n):
                images.append(_apply_reflect(m, c))
            for img in images:
                if img not in seen:
                    seen.add(img)
                    new_frontier.append(img)
        frontier = new_frontier
    return frozenset(seen)


def canonical_matrix_bruteforce(rows: Matrix) -> Matrix:
    """Row-major-lexicographically least matrix in the full orbit."""
    return min(orbit_matrices(rows))


def equivalent_bruteforce(a: Matrix, b: Matrix) -> bool:
    return tuple(b) in orbit_matrices(a)


# ---------------------------------------------------------------------------
# set-level canonical form (fast enough for exhaustive n <= 4 enumeration)
# ---------------------------------------------------------------------------


def canonical_vertex_set(cols: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Least sorted image of {0} | cols under x -> perm(x ^ member)."""
    members = (0,) + tuple(cols)
    best = None
    for m in members:
        shifted = [v ^ m for v in members]
        for perm in itertools.permutations(range(n)):
            image = tuple(sorted(permute_bits(v, perm, n) for v in shifted))
            if best is None or image < best:
                best = image
    return best


def enumerate_classes_bruteforce(n: int) -> list[tuple[int, ...]]:
    """All simplex classes for dimension n, as canonical sorted vertex sets.

    Brute force: every set of n distinct nonzero vertices, keep the
    nonsingular ones, deduplicate by canonical vertex set.
    """
    classes = {}
    for cols in itertools.combinations(range(1, 2**n), n):
        rows = cols_to_rows(cols, n)
        if det_cofactor(rows) == 0:
            continue
        key = canonical_vertex_set(cols, n)
        if key not in classes:
            classes[key] = cols
    return sorted(classes)


# ---------------------------------------------------------------------------
# decomposability witness, brute force
# ---------------------------------------------------------------------------


def find_witness_bruteforce(rows) -> tuple[int, int] | None:
    """Indicator pair (row_mask, col_mask) of an all-zero a-by-b submatrix
    with a + b = n, encoded MSB-first like vertices; None if the matrix is
    fully indecomposable.  Scans column masks in increasing value order and
    packs the zero rows greedily, so the result is deterministic.
    """
    n = len(rows)
    row_vals = rows_to_cols(transpose(rows))  # each row as an n-bit value
    for w in range(1, 2**n - 1):
        b = bin(w).count("1")
        zero_rows = [i for i in range(n) if row_vals[i] & w == 0]
        if len(zero_rows) >= n - b:
            v = 0
            for i in zero_rows[: n - b]:
                v |= 1 << (n - 1 - i)
            return (v, w)
    return None


# ---------------------------------------------------------------------------
# free-tree isomorphism, brute force (tiny node counts only)
# ---------------------------------------------------------------------------


def trees_isomorphic_bruteforce(edges_a, edges_b, n_nodes: int) -> bool:
    ea = {tuple(sorted(e)) for e in edges_a}
    eb = {tuple(sorted(e)) for e in edges_b}
    if len(ea) != len(eb):
        return False
    for perm in itertools.permutations(range(n_nodes)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in ea} == eb:
            return True
    return False
