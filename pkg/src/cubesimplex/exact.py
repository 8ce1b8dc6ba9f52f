"""Exact integer and rational linear algebra.

Everything here is exact: determinants and adjugates run fraction-free
over Python's arbitrary-precision integers (Bareiss-style elimination),
and rational results are ``fractions.Fraction`` values.  There is no
floating point and no tolerance anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .bitcore import BinMatrix
from .errors import SingularMatrixError

IntRows = Sequence[Sequence[int]]


def _as_int_rows(M: Union[BinMatrix, IntRows]) -> list[list[int]]:
    if isinstance(M, BinMatrix):
        return M.to_lists()
    rows = [list(map(int, r)) for r in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows")
    return rows


def bareiss_determinant(M: Union[BinMatrix, IntRows]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All intermediate values are minors of the input, so they stay integral;
    no rationals are ever formed.
    """
    a = _as_int_rows(M)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(M: Union[BinMatrix, IntRows]) -> int:
    """Exact determinant (alias of :func:`bareiss_determinant`)."""
    return bareiss_determinant(M)


def adjugate_and_determinant(M: Union[BinMatrix, IntRows]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer adjugate and determinant via fraction-free Gauss-Jordan.

    Eliminates on the augmented matrix [A | I]; when A is nonsingular the
    left block reduces to det(A')*I (A' = A with the recorded row swaps)
    and the right block to the matching multiple of A^-1, which recovers
    adj(A) exactly.  Raises SingularMatrixError when det = 0 (the adjugate
    of a singular matrix is not needed anywhere in this package).
    """
    a0 = _as_int_rows(M)
    n = len(a0)
    if any(len(r) != n for r in a0):
        raise ValueError("adjugate requires a square matrix")
    if n == 0:
        return ((), 1)
    aug = [a0[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    width = 2 * n
    for k in range(n):
        if aug[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if aug[r][k] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            aug[k], aug[pivot] = aug[pivot], aug[k]
            sign = -sign
        p = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            m = aug[i][k]
            row_i = aug[i]
            row_k = aug[k]
            for j in range(width):
                row_i[j] = (row_i[j] * p - m * row_k[j]) // prev
        prev = p
    d = aug[0][0]
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    for i in range(n):
        for j in range(n):
            if aug[i][j] != (d if i == j else 0):
                raise RuntimeError("internal error: Gauss-Jordan left block not diagonal")
    det = sign * d
    adj = tuple(tuple(sign * aug[i][n + j] for j in range(n)) for i in range(n))
    return adj, det


# ---------------------------------------------------------------------------
# exact rational matrices
# ---------------------------------------------------------------------------


def _coerce_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


@dataclass(frozen=True)
class ExactMatrix:
    """An immutable matrix of ``Fraction`` entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.entries and any(len(r) != len(self.entries[0]) for r in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        return cls(tuple(tuple(_coerce_fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r, Fraction(0)) for r in self.entries)

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(
            sum((r[j] for r in self.entries), Fraction(0)) for j in range(self.ncols)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return ExactMatrix(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols
                )
                for row in self.entries
            )
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            )
        )

    def scaled(self, factor) -> "ExactMatrix":
        f = _coerce_fraction(factor)
        return ExactMatrix(tuple(tuple(f * x for x in r) for r in self.entries))

    def abs(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(abs(x) for x in r) for r in self.entries))

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.nrows) and self.nrows == self.ncols

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(self.nrows)
            for j in range(self.ncols)
            if self.entries[i][j] != 0
        )

    def to_strings(self) -> list[list[str]]:
        """Entries as exact 'p/q' strings (denominator omitted when 1)."""
        return [[str(x) for x in row] for row in self.entries]


# ---------------------------------------------------------------------------
# simplex-specific products
# ---------------------------------------------------------------------------


def gram(P: Union[BinMatrix, IntRows]) -> tuple[tuple[int, ...], ...]:
    """P-transpose times P as an exact integer matrix.

    Accepts rectangular input: for an n-by-k matrix the result is k-by-k.
    """
    rows = _as_int_rows(P)
    n = len(rows)
    k = len(rows[0]) if rows else 0
    cols = [[rows[i][j] for i in range(n)] for j in range(k)]
    return tuple(
        tuple(sum(a * b for a, b in zip(cols[i], cols[j])) for j in range(k))
        for i in range(k)
    )


def exact_inverse(M: Union[BinMatrix, IntRows]) -> ExactMatrix:
    """Exact inverse of an integer matrix, as Fractions."""
    adj, det = adjugate_and_determinant(M)
    return ExactMatrix.from_rows(
        [[Fraction(x, det) for x in row] for row in adj]
    )


def gram_inverse(P: Union[BinMatrix, IntRows]) -> ExactMatrix:
    """Exact inverse of gram(P); raises SingularMatrixError when degenerate."""
    return exact_inverse(gram(P))


def transposed_inverse(P: Union[BinMatrix, IntRows]) -> ExactMatrix:
    """Exact Q = inverse of P-transpose, so that Q-transpose times P = I.

    The columns of Q are inward normals to the simplex facets opposite the
    corresponding columns of P, and Q's row sums form the outward normal
    direction of the facet opposite the origin.
    """
    adj, det = adjugate_and_determinant(P)
    n = len(adj)
    return ExactMatrix.from_rows(
        [[Fraction(adj[j][i], det) for j in range(n)] for i in range(n)]
    )
