"""Vectorized pure-numpy canonicalization kernels.

Semantics (including tie-breaking) match numba_impl exactly: candidates
are scanned origin-major then permutation-major, and the first minimum
wins.  Rows are packed into uint64 scalars for the comparisons — safe
because the widest case is 8 sorted rows of 8 bits = 64 bits.
"""

from __future__ import annotations

import numpy as np

name = "numpy"

_SET_CHUNK = 2048


def canonical_matrix(origin_rows: np.ndarray, table: np.ndarray) -> tuple[np.ndarray, int, int]:
    """Least sorted row-value vector over origins x column permutations.

    origin_rows: (n_origins, n) uint16 row values per origin choice.
    Returns (best_rows, origin_index, perm_index), first minimum in
    origin-major scan order.
    """
    n_origins, n = origin_rows.shape
    n_perms = table.shape[0]
    cand = table[:, origin_rows]              # (n_perms, n_origins, n)
    cand = np.sort(cand, axis=2)
    cand = np.transpose(cand, (1, 0, 2))      # origin-major
    flat = cand.reshape(n_origins * n_perms, n).astype(np.uint64)
    shifts = ((n - 1 - np.arange(n, dtype=np.uint64)) * np.uint64(n)).astype(np.uint64)
    keys = (flat << shifts).sum(axis=1, dtype=np.uint64)
    best = int(np.argmin(keys))
    o, p = divmod(best, n_perms)
    return flat[best].astype(np.uint16), o, p


def canonical_sets(batch: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Per-row least sorted image under member-translation x permutation.

    batch: (m, k) uint16 vertex values, each row a set containing 0.
    Returns (m, k) uint16 canonical sorted tuples.
    """
    m, k = batch.shape
    n_bits = int(table.shape[1]).bit_length() - 1  # table covers 2^n values
    if k * n_bits > 64:
        raise ValueError("set canonicalization exceeds 64-bit packing")
    shifts = ((k - 1 - np.arange(k, dtype=np.uint64)) * np.uint64(n_bits)).astype(np.uint64)
    out = np.empty((m, k), dtype=np.uint16)
    mask = np.uint64((1 << n_bits) - 1)
    for lo in range(0, m, _SET_CHUNK):
        chunk = batch[lo : lo + _SET_CHUNK]
        best: np.ndarray | None = None
        for u in range(k):
            translated = chunk ^ chunk[:, u : u + 1]
            cand = table[:, translated]          # (n_perms, c, k)
            cand = np.sort(cand, axis=2).astype(np.uint64)
            keys = (cand << shifts).sum(axis=2, dtype=np.uint64).min(axis=0)
            best = keys if best is None else np.minimum(best, keys)
        for i in range(k):
            out[lo : lo + _SET_CHUNK, i] = ((best >> shifts[i]) & mask).astype(np.uint16)
    return out
