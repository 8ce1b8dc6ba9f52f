"""Canonical forms for simplex equivalence classes.

Two matrices represent the same simplex class exactly when one can be
reached from the other by column permutations, row permutations and
xor-reflections.  The canonical representative is the matrix whose
row-major bit string is least over the whole orbit.  Because rows are
packed MSB-first, sorting rows ascending as integers IS the optimal row
permutation for any fixed origin choice and column permutation, so the
search space is (n+1 origin choices) x (n! column permutations), walked
by the kernel backends via precomputed bit-permutation tables (n <= 8;
a pure-Python fallback handles larger matrices slowly).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._backends import MAX_TABLE_DIM, get_backend, perm_list, perm_table
from .bitcore import BinMatrix, ColPerm, Operation, Reflect, RowPerm, apply_ops, permute, xor_reflect


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative plus one witness reaching it.

    ``origin`` is the vertex reflected to the origin first (0 = none),
    then ``col_perm`` and ``row_perm`` are applied; ``ops`` is the same
    recipe as replayable operations, so ``apply_ops(P, ops) == matrix``.
    """

    matrix: BinMatrix
    origin: int
    col_perm: tuple[int, ...]
    row_perm: tuple[int, ...]
    ops: tuple[Operation, ...]

    @property
    def key(self) -> tuple[int, ...]:
        return self.matrix.row_bits


def _origin_variants(P: BinMatrix) -> list[tuple[int, ...]]:
    variants = [P.row_bits]
    for c in range(P.ncols):
        variants.append(xor_reflect(P, c).row_bits)
    return variants


def _canonical_python(P: BinMatrix) -> tuple[tuple[int, ...], int, int]:
    """Reference/fallback search, identical scan order to the kernels."""
    n = P.ncols
    best: tuple[int, ...] | None = None
    best_o = best_p = 0
    for o, rows in enumerate(_origin_variants(P)):
        for p, perm in enumerate(itertools.permutations(range(n))):
            cand = tuple(
                sorted(
                    sum(
                        ((value >> (n - 1 - perm[j])) & 1) << (n - 1 - j)
                        for j in range(n)
                    )
                    for value in rows
                )
            )
            if best is None or cand < best:
                best, best_o, best_p = cand, o, p
    assert best is not None
    return best, best_o, best_p


def canonical_form(P: BinMatrix) -> CanonicalForm:
    """Least-orbit representative of a square 0/1 matrix with a witness."""
    if not P.is_square:
        raise ValueError("canonical form is defined for square matrices")
    n = P.nrows
    if n <= MAX_TABLE_DIM:
        backend = get_backend()
        origin_rows = np.array(_origin_variants(P), dtype=np.uint16)
        best_arr, o, p = backend.canonical_matrix(origin_rows, perm_table(n))
        best = tuple(int(x) for x in best_arr)
        perm = perm_list(n)[p]
    else:  # slow but exact; factorial in n
        best, o, p = _canonical_python(P)
        perm = next(itertools.islice(itertools.permutations(range(n)), p, None))
    ops: list[Operation] = []
    M = P
    if o > 0:
        ops.append(Reflect(o - 1))
        M = xor_reflect(M, o - 1)
    M = permute(M, col_perm=perm)
    vals = M.row_bits
    row_perm = tuple(sorted(range(n), key=lambda i: (vals[i], i)))
    M = permute(M, row_perm=row_perm)
    identity = tuple(range(n))
    if perm != identity:
        ops.append(ColPerm(perm))
    if row_perm != identity:
        ops.append(RowPerm(row_perm))
    if M.row_bits != best:
        raise RuntimeError("internal error: canonical witness does not replay")
    return CanonicalForm(
        matrix=M,
        origin=o,
        col_perm=perm,
        row_perm=row_perm,
        ops=tuple(ops),
    )


def canonical_key(P: BinMatrix) -> tuple[int, ...]:
    """Orbit-invariant key: row values of the canonical representative."""
    return canonical_form(P).matrix.row_bits


def equivalent(P: BinMatrix, R: BinMatrix) -> bool:
    """True when P and R represent the same simplex class."""
    if P.nrows != R.nrows or P.ncols != R.ncols:
        raise ValueError("dimension mismatch")
    return canonical_key(P) == canonical_key(R)
