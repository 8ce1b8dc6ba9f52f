"""Numba-compiled canonicalization kernels.

Same contract and tie-breaking as numpy_impl: origin-major then
permutation-major scan, first minimum wins.  The jitted loops release
the GIL so the enumeration layer can run them from a thread pool.
"""

from __future__ import annotations

import numpy as np
from numba import njit

name = "numba"


@njit(cache=True, nogil=True)
def _sort_small(values: np.ndarray) -> None:
    # insertion sort; arrays here have at most 9 elements
    for i in range(1, values.shape[0]):
        key = values[i]
        j = i - 1
        while j >= 0 and values[j] > key:
            values[j + 1] = values[j]
            j -= 1
        values[j + 1] = key


@njit(cache=True, nogil=True)
def _canonical_matrix_kernel(origin_rows, table):
    n_origins, n = origin_rows.shape
    n_perms = table.shape[0]
    best = np.empty(n, np.uint16)
    cand = np.empty(n, np.uint16)
    best_o = -1
    best_p = -1
    for o in range(n_origins):
        for p in range(n_perms):
            for i in range(n):
                cand[i] = table[p, origin_rows[o, i]]
            _sort_small(cand)
            if best_o < 0:
                better = True
            else:
                better = False
                for i in range(n):
                    if cand[i] < best[i]:
                        better = True
                        break
                    if cand[i] > best[i]:
                        break
            if better:
                for i in range(n):
                    best[i] = cand[i]
                best_o = o
                best_p = p
    return best, best_o, best_p


@njit(cache=True, nogil=True)
def _canonical_sets_kernel(batch, table, out):
    m, k = batch.shape
    n_perms = table.shape[0]
    translated = np.empty(k, np.uint16)
    cand = np.empty(k, np.uint16)
    best = np.empty(k, np.uint16)
    for r in range(m):
        started = False
        for u in range(k):
            base = batch[r, u]
            for i in range(k):
                translated[i] = batch[r, i] ^ base
            for p in range(n_perms):
                for i in range(k):
                    cand[i] = table[p, translated[i]]
                _sort_small(cand)
                if not started:
                    better = True
                else:
                    better = False
                    for i in range(k):
                        if cand[i] < best[i]:
                            better = True
                            break
                        if cand[i] > best[i]:
                            break
                if better:
                    for i in range(k):
                        best[i] = cand[i]
                    started = True
        for i in range(k):
            out[r, i] = best[i]


def canonical_matrix(origin_rows: np.ndarray, table: np.ndarray) -> tuple[np.ndarray, int, int]:
    best, o, p = _canonical_matrix_kernel(
        np.ascontiguousarray(origin_rows, dtype=np.uint16),
        np.ascontiguousarray(table, dtype=np.uint16),
    )
    return best, int(o), int(p)


def canonical_sets(batch: np.ndarray, table: np.ndarray) -> np.ndarray:
    batch = np.ascontiguousarray(batch, dtype=np.uint16)
    out = np.empty_like(batch)
    _canonical_sets_kernel(batch, np.ascontiguousarray(table, dtype=np.uint16), out)
    return out
