"""Enumeration of simplex classes and batch property sweeps.

``enumerate_classes`` lists every equivalence class of nondegenerate
0/1-simplices in dimension n exactly once.  It works level by level on
vertex *sets*: a class is identified by the least image of its vertex set
{0, c_1..c_d} under translation by a member (XOR) composed with a
coordinate permutation — the set-level mirror of the matrix operations.
Each level extends every canonical set by every linearly independent new
vertex and deduplicates canonically, so every class at the next level is
reached (remove any nonzero vertex of a class and you land on a canonical
set of the previous level).  At full dimension the surviving sets are
turned into matrices (columns in increasing bit-value order), polished by
the matrix-level canonical form, classified exactly, and emitted in
ascending canonical order.

Dimension is capped at 6 (the level widths grow super-exponentially).
Work is chunked across ``SIMPLEX_THREADS`` workers; the result is a set
union followed by a sort, so thread count cannot change the output.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from ._backends import get_backend, perm_table, thread_count
from .bitcore import BinMatrix, BinVector
from .canon import canonical_form
from .errors import DimensionTooLargeError
from .exact import gram, transposed_inverse
from .geometry import (
    Classification,
    Verdict,
    classify,
    sign_pattern_check,
    stochastic_split,
    subsimplex,
)
from .structure import block_triangular_form, indecomposable_components, is_fully_indecomposable

MAX_ENUM_DIM = 6

_CHUNK = 2048


# ---------------------------------------------------------------------------
# exact incremental rank filter
# ---------------------------------------------------------------------------


class _RankFilter:
    """Tests whether a new 0/1 column is independent of a fixed set.

    Keeps a GF(2) echelon (bit tricks) as a fast path and an exact
    Fraction echelon for the inconclusive cases.  The fast path is only
    sound when the base set is itself GF(2)-independent: then a nonzero
    mod-2 residual makes the whole extended set GF(2)-independent, which
    forces rational independence (a rational dependence with coprime
    integer coefficients survives reduction mod 2).  When the base is
    GF(2)-degenerate — e.g. {0011, 0101, 0110}, rationally independent
    yet XOR-ing to zero — a mod-2 relation need not involve the new
    column at all, so every answer must come from the exact echelon.
    """

    def __init__(self, n: int, values: tuple[int, ...]):
        self.n = n
        self.gf2: list[int] = []
        self.basis: list[tuple[int, list[Fraction]]] = []  # (pivot, normalized row)
        for v in values:
            if v:
                self.add(v)

    def _vector(self, value: int) -> list[Fraction]:
        n = self.n
        return [Fraction((value >> (n - 1 - i)) & 1) for i in range(n)]

    def _reduce_exact(self, value: int) -> list[Fraction] | None:
        vec = self._vector(value)
        for pivot, row in self.basis:
            c = vec[pivot]
            if c:
                for i in range(pivot, self.n):
                    vec[i] -= c * row[i]
        for x in vec:
            if x:
                return vec
        return None

    def independent(self, value: int) -> bool:
        if len(self.gf2) == len(self.basis):
            residual = value
            for b in self.gf2:
                h = b.bit_length()
                if residual.bit_length() == h:
                    residual ^= b
            if residual:
                return True
        return self._reduce_exact(value) is not None

    def add(self, value: int) -> None:
        residual = value
        for b in self.gf2:
            h = b.bit_length()
            if residual.bit_length() == h:
                residual ^= b
        if residual:
            self.gf2.append(residual)
            self.gf2.sort(key=int.bit_length, reverse=True)
        vec = self._reduce_exact(value)
        if vec is None:
            raise ValueError("dependent column added to rank filter")
        pivot = next(i for i, x in enumerate(vec) if x)
        inv = Fraction(1) / vec[pivot]
        row = [x * inv for x in vec]
        self.basis.append((pivot, row))


# ---------------------------------------------------------------------------
# the level-wise search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassRecord:
    """One enumerated equivalence class."""

    matrix: BinMatrix
    classification: Classification
    vertex_set: tuple[int, ...]

    @property
    def verdict(self) -> Verdict:
        return self.classification.verdict


def _extend_level(
    reps: list[tuple[int, ...]], n: int, table: np.ndarray, workers: int
) -> list[tuple[int, ...]]:
    backend = get_backend()
    rows: list[tuple[int, ...]] = []
    full = 1 << n
    for rep in reps:
        members = set(rep)
        rank = _RankFilter(n, rep)
        for v in range(1, full):
            if v in members or not rank.independent(v):
                continue
            rows.append(rep + (v,))
    if not rows:
        return []
    batch = np.array(rows, dtype=np.uint16)

    def run(lo: int) -> np.ndarray:
        return backend.canonical_sets(batch[lo : lo + _CHUNK], table)

    offsets = range(0, len(rows), _CHUNK)
    if workers > 1 and len(rows) > _CHUNK:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(run, offsets))
    else:
        pieces = [run(lo) for lo in offsets]
    seen: set[tuple[int, ...]] = set()
    for piece in pieces:
        seen.update(tuple(int(x) for x in row) for row in piece)
    return sorted(seen)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[ClassRecord, ...]:
    if not 1 <= n <= MAX_ENUM_DIM:
        raise DimensionTooLargeError(
            f"class enumeration supports dimensions 1..{MAX_ENUM_DIM}, got {n}"
        )
    table = perm_table(n)
    workers = thread_count()
    level: list[tuple[int, ...]] = [(0,)]
    for _ in range(n):
        level = _extend_level(level, n, table, workers)
    records = []
    seen_keys = set()
    for config in level:
        columns = [BinVector(n, v) for v in config[1:]]
        raw = BinMatrix.from_columns(columns)
        form = canonical_form(raw)
        if form.key in seen_keys:
            raise RuntimeError(
                "internal error: distinct canonical sets collapsed to one matrix class"
            )
        seen_keys.add(form.key)
        classification = classify(form.matrix)
        if classification.verdict is Verdict.DEGENERATE:
            raise RuntimeError(
                "internal error: degenerate configuration survived the rank filter"
            )
        records.append(
            ClassRecord(
                matrix=form.matrix,
                classification=classification,
                vertex_set=config,
            )
        )
    records.sort(key=lambda r: r.matrix.row_bits)
    return tuple(records)


def _is_orthogonal_record(record: ClassRecord) -> bool:
    from .ortho import is_orthogonal_simplex

    return is_orthogonal_simplex(record.matrix)


_FILTERS = {
    "all": lambda r: True,
    "nonobtuse": lambda r: r.classification.is_nonobtuse,
    "acute": lambda r: r.classification.is_acute,
    "fully-indecomposable": lambda r: r.classification.is_nonobtuse
    and is_fully_indecomposable(r.matrix),
    "orthogonal": _is_orthogonal_record,
}


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    filter_name: str
    classes: tuple[ClassRecord, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def verdict_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for record in self.classes:
            counts[record.verdict.value] = counts.get(record.verdict.value, 0) + 1
        return counts

    def matrices(self) -> list[BinMatrix]:
        return [record.matrix for record in self.classes]


def enumerate_classes(n: int, filter_name: str = "all") -> EnumerationResult:
    """All equivalence classes in dimension n passing the named filter.

    Filters: all, nonobtuse (includes acute), acute, fully-indecomposable
    (nonobtuse with a fully indecomposable matrix — well-defined because
    decomposability is class-invariant for nonobtuse simplices), and
    orthogonal.  Results are cached per dimension.
    """
    key = filter_name.strip().lower().replace("_", "-")
    if key not in _FILTERS:
        raise ValueError(
            f"unknown filter {filter_name!r}; choose from {sorted(_FILTERS)}"
        )
    pred = _FILTERS[key]
    records = tuple(r for r in _all_classes(n) if pred(r))
    return EnumerationResult(n=n, filter_name=key, classes=records)


# ---------------------------------------------------------------------------
# property sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepReport:
    n: int
    property_name: str
    passed: bool
    checked: int
    counterexample: BinMatrix | None = None
    detail: str = ""


def _sweep_sign_structure(records) -> tuple[int, BinMatrix | None, str]:
    checked = 0
    for record in records:
        if not record.classification.is_acute:
            continue
        checked += 1
        P = record.matrix
        report = sign_pattern_check(P)
        if not report.ok or report.zero_entries:
            return checked, P, "sign pattern violation"
        split = stochastic_split(transposed_inverse(P))
        one = Fraction(1)
        if any(s != one for s in split.positive.row_sums()):
            return checked, P, "positive part not row-stochastic"
        if any(s != one for s in split.positive.column_sums()):
            return checked, P, "positive part not column-stochastic"
        if split.positive.support() != P.support():
            return checked, P, "positive part support differs from P"
        if any(s >= one for s in split.negated_negative.row_sums()):
            return checked, P, "negative part row sum not < 1"
    return checked, None, ""


def _sweep_strips(records) -> tuple[int, BinMatrix | None, str]:
    checked = 0
    for record in records:
        if not record.classification.is_nonobtuse:
            continue
        checked += 1
        try:
            form = block_triangular_form(record.matrix)
        except RuntimeError as exc:
            return checked, record.matrix, str(exc)
        if any(b.nrows == 2 for b in form.blocks):
            return checked, record.matrix, "size-2 block"
    return checked, None, ""


def _sweep_gram_bound(records) -> tuple[int, BinMatrix | None, str]:
    checked = 0
    for record in records:
        if not record.classification.is_nonobtuse:
            continue
        # The entrywise bound concerns pairs of distinct edges at a vertex,
        # so it is vacuous for 1x1 matrices (the edge simplex).
        if record.matrix.nrows < 2:
            continue
        if not is_fully_indecomposable(record.matrix):
            continue
        checked += 1
        G = gram(record.matrix)
        k = len(G)
        for i in range(k):
            for j in range(k):
                if G[i][j] < (2 if i == j else 1):
                    return checked, record.matrix, f"gram entry ({i},{j}) below bound"
                if i != j and G[i][i] <= G[i][j]:
                    return checked, record.matrix, f"diagonal not strict max in row {i}"
    return checked, None, ""


def _sweep_fi_acute(records) -> tuple[int, BinMatrix | None, str]:
    checked = 0
    for record in records:
        if not record.classification.is_nonobtuse:
            continue
        if not is_fully_indecomposable(record.matrix):
            continue
        checked += 1
        if not record.classification.is_acute:
            return checked, record.matrix, "fully indecomposable nonobtuse but not acute"
    return checked, None, ""


def _sweep_facets(records) -> tuple[int, BinMatrix | None, str]:
    checked = 0
    for record in records:
        if not record.classification.is_nonobtuse:
            continue
        checked += 1
        P = record.matrix
        n = P.nrows
        acute = record.classification.is_acute
        for size in range(2, n + 1):
            for subset in combinations(range(n + 1), size):
                sub = subsimplex(P, subset)
                verdict = classify(sub)
                if not verdict.is_nonobtuse:
                    return checked, P, f"facet {subset} not nonobtuse"
                if acute and not verdict.is_acute:
                    return checked, P, f"facet {subset} of acute simplex not acute"
    return checked, None, ""


def _sweep_one_neighbor_acute(records) -> tuple[int, BinMatrix | None, str]:
    from .neighbors import neighbor_search

    checked = 0
    for record in records:
        if not record.classification.is_acute:
            continue
        checked += 1
        P = record.matrix
        for facet in range(P.nrows + 1):
            report = neighbor_search(P, facet)
            # Facets of acute simplices avoid the cube boundary — except at
            # n=1, where every facet is a vertex and vertices always lie in
            # 0-dimensional cube facets.
            if P.nrows >= 2 and not report.interior:
                return checked, P, f"facet {facet} of acute simplex not interior"
            fresh = [c for c in report.candidates if not c.is_existing]
            n_acute = sum(1 for c in fresh if c.verdict is Verdict.ACUTE)
            n_nonobtuse = sum(
                1 for c in fresh if c.verdict in (Verdict.ACUTE, Verdict.NONOBTUSE)
            )
            if n_acute > 1 or n_nonobtuse > 1:
                return checked, P, f"facet {facet} has multiple completions"
    return checked, None, ""


def _sweep_one_neighbor_components(records) -> tuple[int, BinMatrix | None, str]:
    from .neighbors import verify_one_neighbor_all_acute_components

    checked = 0
    for record in records:
        if not record.classification.is_nonobtuse:
            continue
        decomposition = indecomposable_components(record.matrix)
        if any(
            c.dimension > 1 and not classify(c.matrix).is_acute
            for c in decomposition.components
        ):
            continue
        checked += 1
        if not verify_one_neighbor_all_acute_components(record.matrix):
            return checked, record.matrix, "interior facet with multiple completions"
    return checked, None, ""


PROPERTY_CHECKS = {
    "thm3.1-sign": _sweep_sign_structure,
    "thm4.1-strips": _sweep_strips,
    "lem6.6-gram": _sweep_gram_bound,
    "thm6.8-fi-implies-acute": _sweep_fi_acute,
    "fiedler-facets": _sweep_facets,
    "one-neighbor-acute": _sweep_one_neighbor_acute,
    "one-neighbor-all-acute-components": _sweep_one_neighbor_components,
}


def sweep_verify(n: int, property_name: str) -> SweepReport:
    """Check one registered property over every enumerated class.

    Registry keys: thm3.1-sign, thm4.1-strips, lem6.6-gram,
    thm6.8-fi-implies-acute, fiedler-facets, one-neighbor-acute,
    one-neighbor-all-acute-components.
    """
    if property_name not in PROPERTY_CHECKS:
        raise ValueError(
            f"unknown property {property_name!r}; choose from {sorted(PROPERTY_CHECKS)}"
        )
    records = _all_classes(n)
    checked, counterexample, detail = PROPERTY_CHECKS[property_name](records)
    return SweepReport(
        n=n,
        property_name=property_name,
        passed=counterexample is None,
        checked=checked,
        counterexample=counterexample,
        detail=detail,
    )
