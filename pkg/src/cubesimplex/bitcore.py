"""Bit-packed 0/1 vectors and matrices and the three equivalence operations.

A ``BinVector`` is a point of the unit-cube vertex set {0,1}^n; a
``BinMatrix`` holds one bit-packed integer per row.  Coordinate i of a
width-n vector lives at bit (n-1-i), i.e. the most significant bit is the
first coordinate, so the integer ordering of packed values equals the
lexicographic ordering of coordinate tuples.  Matrices up to 64x64 are
supported.

The three operations that preserve the shape class of the simplex spanned
by the origin and the matrix columns are:

* column permutation (reorders the nonzero vertices),
* row permutation (relabels the cube's coordinates),
* ``xor_reflect`` at a column c (swaps the roles of vertex c and the
  origin by XOR-ing column c into every other column; an involution).

All indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import MatrixFormatError

MAX_DIM = 64


def _check_width(n: int) -> None:
    if not 0 < n <= MAX_DIM:
        raise ValueError(f"width must be in 1..{MAX_DIM}, got {n}")


@dataclass(frozen=True, order=True)
class BinVector:
    """An immutable 0/1 vector of length ``n``, packed MSB-first."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_width(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for n={self.n}")

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "BinVector":
        entries = list(entries)
        bits = 0
        for e in entries:
            if e not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {e!r}")
            bits = (bits << 1) | e
        return cls(len(entries), bits)

    @classmethod
    def from_string(cls, text: str) -> "BinVector":
        try:
            return cls.from_entries(int(ch) for ch in text.strip())
        except ValueError as exc:
            raise MatrixFormatError(f"invalid row {text!r}: {exc}") from exc

    @classmethod
    def zero(cls, n: int) -> "BinVector":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "BinVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BinVector":
        if not 0 <= i < n:
            raise ValueError(f"unit index {i} out of range for n={n}")
        return cls(n, 1 << (n - 1 - i))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> (self.n - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __xor__(self, other: "BinVector") -> "BinVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BinVector(self.n, self.bits ^ other.bits)

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def to_string(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def ones(self) -> int:
        """Number of coordinates equal to 1."""
        return bin(self.bits).count("1")

    def zeros(self) -> int:
        """Number of coordinates equal to 0."""
        return self.n - self.ones()

    def support(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self[i])

    def is_zero(self) -> bool:
        return self.bits == 0

    def antipode(self) -> "BinVector":
        """The opposite cube vertex: every coordinate flipped."""
        return BinVector(self.n, self.bits ^ ((1 << self.n) - 1))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"BinVector({self.to_string()})"


@dataclass(frozen=True, order=True)
class BinMatrix:
    """An immutable 0/1 matrix; each row packed into one integer, MSB-first."""

    nrows: int
    ncols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_width(self.nrows)
        _check_width(self.ncols)
        if len(self.row_bits) != self.nrows:
            raise ValueError("row count does not match row_bits")
        for r in self.row_bits:
            if not 0 <= r < (1 << self.ncols):
                raise ValueError(f"row value 0x{r:x} out of range")

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinMatrix":
        vecs = [BinVector.from_entries(r) for r in rows]
        ncols = vecs[0].n if vecs else 0
        if any(v.n != ncols for v in vecs):
            raise ValueError("ragged rows")
        return cls(len(vecs), ncols, tuple(v.bits for v in vecs))

    @classmethod
    def from_columns(cls, columns: Sequence[BinVector]) -> "BinMatrix":
        n = columns[0].n
        if any(c.n != n for c in columns):
            raise ValueError("column length mismatch")
        k = len(columns)
        row_bits = tuple(
            sum(col[i] << (k - 1 - j) for j, col in enumerate(columns))
            for i in range(n)
        )
        return cls(n, k, row_bits)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BinMatrix":
        vecs = [BinVector.from_string(line) for line in lines]
        if not vecs:
            raise MatrixFormatError("no rows")
        ncols = vecs[0].n
        if any(v.n != ncols for v in vecs):
            raise MatrixFormatError("ragged rows")
        return cls(len(vecs), ncols, tuple(v.bits for v in vecs))

    @classmethod
    def from_text(cls, text: str) -> "BinMatrix":
        """Parse rows of '0'/'1' characters; a blank line ends the matrix."""
        lines = []
        for raw in text.splitlines():
            line = "".join(raw.split())
            if not line:
                if lines:
                    break
                continue
            lines.append(line)
        return cls.from_strings(lines)

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BinMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def ones_matrix(cls, nrows: int, ncols: int) -> "BinMatrix":
        return cls(nrows, ncols, ((1 << ncols) - 1,) * nrows)

    # -- element access ------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError((i, j))
        return (self.row_bits[i] >> (self.ncols - 1 - j)) & 1

    def row(self, i: int) -> BinVector:
        return BinVector(self.ncols, self.row_bits[i])

    def column(self, j: int) -> BinVector:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        bits = 0
        for i in range(self.nrows):
            bits = (bits << 1) | self.entry(i, j)
        return BinVector(self.nrows, bits)

    def columns(self) -> list[BinVector]:
        return [self.column(j) for j in range(self.ncols)]

    def rows(self) -> list[BinVector]:
        return [self.row(i) for i in range(self.nrows)]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def to_strings(self) -> list[str]:
        return [self.row(i).to_string() for i in range(self.nrows)]

    def to_text(self) -> str:
        return "\n".join(self.to_strings()) + "\n"

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def ones(self) -> int:
        """Total number of 1 entries."""
        return sum(bin(r).count("1") for r in self.row_bits)

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(self.nrows)
            for j in range(self.ncols)
            if self.entry(i, j)
        )

    def transpose(self) -> "BinMatrix":
        return BinMatrix.from_columns(self.rows())

    def antipode(self) -> "BinMatrix":
        """Flip every entry (each column replaced by its opposite vertex)."""
        full = (1 << self.ncols) - 1
        return BinMatrix(self.nrows, self.ncols, tuple(r ^ full for r in self.row_bits))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return "BinMatrix[" + ",".join(self.to_strings()) + "]"


# ---------------------------------------------------------------------------
# the equivalence operations
# ---------------------------------------------------------------------------


def antipode(x: Union[BinVector, BinMatrix]):
    """Entrywise complement of a vector or matrix."""
    return x.antipode()


def xor_reflect(P: BinMatrix, c: int) -> BinMatrix:
    """XOR column ``c`` into every other column; column ``c`` is unchanged.

    Geometrically this exchanges vertex ``c`` with the origin: the simplex
    is reflected so that vertex c sits at the origin, and the remaining
    vertices become their XOR-translates.  Involution: applying it twice
    returns the original matrix.
    """
    if not 0 <= c < P.ncols:
        raise ValueError(f"column {c} out of range")
    cbit = 1 << (P.ncols - 1 - c)
    others = ((1 << P.ncols) - 1) ^ cbit
    new_rows = tuple(r ^ others if r & cbit else r for r in P.row_bits)
    return BinMatrix(P.nrows, P.ncols, new_rows)


def _check_perm(perm: Sequence[int], n: int, kind: str) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{kind} permutation {perm!r} is not a permutation of 0..{n - 1}")
    return perm


def permute(
    P: BinMatrix,
    row_perm: Sequence[int] | None = None,
    col_perm: Sequence[int] | None = None,
) -> BinMatrix:
    """Reorder rows and/or columns: result(i, j) = P(row_perm[i], col_perm[j])."""
    rp = _check_perm(row_perm, P.nrows, "row") if row_perm is not None else tuple(range(P.nrows))
    cp = _check_perm(col_perm, P.ncols, "column") if col_perm is not None else tuple(range(P.ncols))
    k = P.ncols
    new_rows = []
    for i in range(P.nrows):
        src = P.row_bits[rp[i]]
        bits = 0
        for j in range(k):
            bits = (bits << 1) | ((src >> (k - 1 - cp[j])) & 1)
        new_rows.append(bits)
    return BinMatrix(P.nrows, P.ncols, tuple(new_rows))


# ---------------------------------------------------------------------------
# operation records (for orbit witnesses and replayable transcripts)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Reflect:
    """xor_reflect at ``column``."""

    column: int


@dataclass(frozen=True)
class RowPerm:
    perm: tuple[int, ...]


@dataclass(frozen=True)
class ColPerm:
    perm: tuple[int, ...]


Operation = Union[Reflect, RowPerm, ColPerm]


def apply_op(P: BinMatrix, op: Operation) -> BinMatrix:
    if isinstance(op, Reflect):
        return xor_reflect(P, op.column)
    if isinstance(op, RowPerm):
        return permute(P, row_perm=op.perm)
    if isinstance(op, ColPerm):
        return permute(P, col_perm=op.perm)
    raise TypeError(f"not an operation: {op!r}")


def apply_ops(P: BinMatrix, ops: Iterable[Operation]) -> BinMatrix:
    for op in ops:
        P = apply_op(P, op)
    return P
