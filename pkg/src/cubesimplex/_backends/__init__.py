"""Kernel backend selection for the hot canonicalization loops.

Two interchangeable implementations exist: a numba-compiled one and a
vectorized pure-numpy one.  The environment variable ``SIMPLEX_BACKEND``
picks between them: ``numba``, ``numpy``, or ``auto`` (default: numba
when importable, else numpy).  Both backends implement the same two
kernels with identical outputs, including tie-breaking order:

* ``canonical_matrix(origin_rows, table)`` — least row-sorted bit matrix
  over all origin choices and column permutations, with its witness;
* ``canonical_sets(batch, table)`` — for each row (a vertex set including
  0), the least sorted image under member-translation and coordinate
  permutation.

Row/vertex values are bit-packed MSB-first integers; ``table[p][v]`` is
the value v with its bits rearranged by permutation p (new coordinate i =
old coordinate p[i]), which serves both column permutations acting on row
values and coordinate permutations acting on vertex values.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Protocol

import numpy as np

MAX_TABLE_DIM = 8


@lru_cache(maxsize=None)
def perm_list(n: int) -> tuple[tuple[int, ...], ...]:
    """All permutations of range(n) in lexicographic order."""
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def perm_table(n: int) -> np.ndarray:
    """(n!, 2^n) uint16 table of bit-permuted values (see module docstring)."""
    if not 1 <= n <= MAX_TABLE_DIM:
        raise ValueError(f"permutation tables support 1..{MAX_TABLE_DIM}, got {n}")
    perms = np.array(perm_list(n), dtype=np.int64)  # (n!, n)
    values = np.arange(1 << n, dtype=np.uint16)
    bits = (values[:, None] >> (n - 1 - np.arange(n))) & 1  # (2^n, n); col i = coord i
    weights = (1 << (n - 1 - np.arange(n, dtype=np.uint16))).astype(np.uint16)
    table = np.empty((len(perms), 1 << n), dtype=np.uint16)
    for p, perm in enumerate(perms):
        table[p] = (bits[:, perm] * weights).sum(axis=1).astype(np.uint16)
    return table


class Backend(Protocol):  # pragma: no cover - typing aid
    name: str

    def canonical_matrix(
        self, origin_rows: np.ndarray, table: np.ndarray
    ) -> tuple[np.ndarray, int, int]: ...

    def canonical_sets(self, batch: np.ndarray, table: np.ndarray) -> np.ndarray: ...


def _resolve_name(name: str | None) -> str:
    if name is None:
        name = os.environ.get("SIMPLEX_BACKEND", "auto")
    name = name.strip().lower()
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"SIMPLEX_BACKEND must be auto, numba or numpy, got {name!r}")
    if name == "auto":
        try:
            import numba  # noqa: F401

            return "numba"
        except ImportError:
            return "numpy"
    return name


@lru_cache(maxsize=None)
def _load(name: str) -> Backend:
    if name == "numba":
        from . import numba_impl

        return numba_impl
    from . import numpy_impl

    return numpy_impl


def get_backend(name: str | None = None) -> Backend:
    """The active kernel backend (see module docstring for selection)."""
    return _load(_resolve_name(name))


def thread_count() -> int:
    """Worker count from SIMPLEX_THREADS (0 or unset = auto-detect)."""
    raw = os.environ.get("SIMPLEX_THREADS", "0")
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"SIMPLEX_THREADS must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"SIMPLEX_THREADS must be >= 0, got {value}")
    if value == 0:
        return os.cpu_count() or 1
    return value
