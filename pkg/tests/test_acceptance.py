"""Acceptance gate: ten primary criteria, one pass/fail line each.

Every criterion prints ``CRITERION k (<label>): PASS|FAIL`` on its own
line.  pytest captures stdout by default, so run this file with ``-s``
to see the lines on passing runs:

    pytest tests/test_acceptance.py -s

All arithmetic comparisons are exact (integers and fractions, tolerance
zero).
"""

import itertools
import math
import random
import time
from fractions import Fraction

import oracles
from cubesimplex import golden
from cubesimplex.bitcore import (
    BinMatrix,
    BinVector,
    ColPerm,
    Reflect,
    RowPerm,
    apply_op,
    apply_ops,
    xor_reflect,
)
from cubesimplex.canon import canonical_key, equivalent
from cubesimplex.enumeration import enumerate_classes, sweep_verify
from cubesimplex.exact import bareiss_determinant, gram, transposed_inverse
from cubesimplex.geometry import classify, sign_pattern_check, stochastic_split
from cubesimplex.neighbors import neighbor_search
from cubesimplex.ortho import enumerate_upper_triangular_ortho, is_orthogonal_simplex
from cubesimplex.structure import (
    block_diagonalize,
    block_triangular_form,
    find_partition_witness,
    is_fully_indecomposable,
)


def _run(number: int, label: str, body) -> None:
    """Execute one criterion body and print its single pass/fail line."""
    error: AssertionError | None = None
    try:
        body()
    except AssertionError as exc:  # pragma: no cover - only on regression
        error = exc
    status = "PASS" if error is None else "FAIL"
    print(f"CRITERION {number:02d} ({label}): {status}")
    if error is not None:
        raise error


def test_criterion_01():
    def body():
        start = time.perf_counter()
        P = golden.ACUTE_7
        assert classify(P).is_acute
        Q = transposed_inverse(P)
        expected = golden.scaled_inverse_transpose(
            golden.ACUTE_7_INVERSE_T_NUMERATORS, golden.ACUTE_7_SCALE
        )
        assert Q.entries == expected
        assert abs(bareiss_determinant(P)) == 13
        split = stochastic_split(Q)
        assert all(s == 1 for s in split.positive.row_sums())
        assert all(s == 1 for s in split.positive.column_sums())
        assert split.negated_negative.column_sums()[2] == Fraction(14, 13)
        assert not classify(P.transpose()).is_acute
        assert time.perf_counter() - start < 1.0

    _run(1, "acute 7x7 golden", body)


def test_criterion_02():
    def body():
        P = golden.MIXED_7
        c = classify(P)
        assert c.is_nonobtuse and not c.is_acute
        Q = transposed_inverse(P)
        expected = golden.scaled_inverse_transpose(
            golden.MIXED_7_INVERSE_T_NUMERATORS, golden.MIXED_7_SCALE
        )
        assert Q.entries == expected
        assert not is_fully_indecomposable(P)
        assert block_triangular_form(P).block_sizes == (1, 1, 1, 1, 3)
        support_positive = stochastic_split(Q).positive.support()
        assert support_positive < frozenset(P.support())

    _run(2, "mixed decomposable 7x7 golden", body)


def test_criterion_03():
    def body():
        P = golden.INDECOMPOSABLE_9
        c = classify(P)
        assert c.is_nonobtuse and not c.is_acute
        assert is_fully_indecomposable(P)
        q = transposed_inverse(P).row_sums()
        assert q == tuple(
            Fraction(x, 20) for x in (10, 5, 5, 5, 5, 0, 0, 0, 0)
        )
        G = gram(P)
        for i in range(9):
            for j in range(9):
                assert G[i][j] >= (2 if i == j else 1)

    _run(3, "fully indecomposable 9x9 golden", body)


def test_criterion_04():
    def body():
        reps = golden.TETRAHEDRON_REPS_3
        for A, B in itertools.combinations(reps, 2):
            assert equivalent(A, B)
        assert enumerate_classes(3).count == 4

    _run(4, "tetrahedron representations and 3d class count", body)


def test_criterion_05():
    def body():
        chain = golden.REFLECT_CHAIN_7
        assert chain[0] == golden.MIXED_7
        reflected = xor_reflect(chain[0], 1)
        assert reflected == chain[1]
        # block diagonal: both off-diagonal 4x3 and 3x4 quadrants are zero
        for i in range(4):
            for j in range(4, 7):
                assert reflected.entry(i, j) == 0
        for i in range(4, 7):
            for j in range(4):
                assert reflected.entry(i, j) == 0
        current = chain[0]
        for target, ops in zip(chain[1:], golden.REFLECT_CHAIN_7_OPS):
            current = apply_ops(current, ops)
            assert current == target

    _run(5, "reflection chain to block diagonal form", body)


def test_criterion_06():
    def body():
        for n in range(1, 7):
            mats = enumerate_upper_triangular_ortho(n)
            assert len(mats) == math.factorial(n)
            for m in mats:
                assert is_orthogonal_simplex(m)

    _run(6, "orthogonal simplex enumeration counts", body)


def test_criterion_07():
    def body():
        report = neighbor_search(golden.OBTUSE_5, 0)
        feet = {v.to_tuple() for v in report.altitude_feet}
        assert feet == set(golden.OBTUSE_5_PROJECTING_VERTICES)
        assert len(feet) == 4  # more than the two possible for nonobtuse

    _run(7, "obtuse 5x5 altitude feet", body)


def test_criterion_08():
    def body():
        for n in range(1, 6):
            report = sweep_verify(n, "thm6.8-fi-implies-acute")
            assert report.passed, report.detail
        # dimension-9 boundary case: fully indecomposable and nonobtuse
        # without being acute, so the low-dimensional implication is sharp
        P = golden.INDECOMPOSABLE_9
        c = classify(P)
        assert is_fully_indecomposable(P)
        assert c.is_nonobtuse and not c.is_acute

    _run(8, "indecomposable-implies-acute sweep with 9x9 boundary case", body)


def test_criterion_09():
    def body():
        start = time.perf_counter()
        for n in range(1, 6):
            for key in ("one-neighbor-acute", "one-neighbor-all-acute-components"):
                report = sweep_verify(n, key)
                assert report.passed, report.detail
        assert time.perf_counter() - start < 600.0  # minutes, not hours

    _run(9, "one-neighbor sweeps", body)


# -- criterion 10: property suites ---------------------------------------------------


def _random_op(rng: random.Random, n: int):
    kind = rng.randrange(3)
    if kind == 0:
        return Reflect(rng.randrange(n))
    if kind == 1:
        return RowPerm(tuple(rng.sample(range(n), n)))
    return ColPerm(tuple(rng.sample(range(n), n)))


def _random_nonsingular(rng: random.Random, n: int) -> BinMatrix:
    while True:
        M = BinMatrix.from_rows(
            [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        )
        if bareiss_determinant(M) != 0:
            return M


def _suite_invariance() -> None:
    rng = random.Random(101)
    seeds = [
        BinMatrix.identity(1),
        BinMatrix.identity(2),
        golden.REGULAR_3,
        BinMatrix.from_strings(("1111", "0111", "0011", "0001")),
        golden.OBTUSE_5,
        BinMatrix.from_rows(
            [(1, 0, 0, 0, 0, 0)]
            + [(0, *row) for row in golden.OBTUSE_5.to_lists()]
        ),
    ] + [_random_nonsingular(rng, n) for n in range(1, 7)]
    for M in seeds:
        n = M.nrows
        verdict = classify(M).verdict
        key = canonical_key(M)
        ortho = is_orthogonal_simplex(M)
        decomposable = (
            not is_fully_indecomposable(M) if classify(M).is_nonobtuse else None
        )
        current = M
        for _ in range(1000):
            current = apply_op(current, _random_op(rng, n))
            c = classify(current)
            assert c.verdict is verdict
            assert canonical_key(current) == key
            assert is_orthogonal_simplex(current) == ortho
            if decomposable is not None:
                assert (not is_fully_indecomposable(current)) == decomposable


def _check_witness_agreement(M: BinMatrix) -> None:
    witness = find_partition_witness(M)
    brute = oracles.find_witness_bruteforce(tuple(map(tuple, M.to_lists())))
    assert (witness is None) == (brute is None)
    if witness is not None:
        rows = witness.row_indices()
        cols = witness.col_indices()
        assert rows and cols and len(rows) + len(cols) == M.nrows
        for i in rows:
            for j in cols:
                assert M.entry(i, j) == 0


def _suite_decomposability_oracle() -> None:
    for n in (1, 2, 3):
        for bits in itertools.product(range(2**n), repeat=n):
            _check_witness_agreement(BinMatrix(n, n, tuple(bits)))
    rng = random.Random(202)
    for _ in range(300):
        M = BinMatrix.from_rows(
            [[rng.randint(0, 1) for _ in range(6)] for _ in range(6)]
        )
        _check_witness_agreement(M)


def _suite_determinant_oracle() -> None:
    for n in (1, 2, 3):
        for bits in itertools.product(range(2**n), repeat=n):
            rows = tuple(
                tuple((b >> (n - 1 - j)) & 1 for j in range(n)) for b in bits
            )
            assert bareiss_determinant(rows) == oracles.det_cofactor(rows)
    for bits in itertools.product(range(16), repeat=4):
        rows = tuple(tuple((b >> (3 - j)) & 1 for j in range(4)) for b in bits)
        assert bareiss_determinant(rows) == oracles.det_cofactor(rows)


def _suite_sign_and_facets() -> None:
    for n in range(1, 6):
        for key in ("thm3.1-sign", "fiedler-facets"):
            report = sweep_verify(n, key)
            assert report.passed, report.detail
        for record in enumerate_classes(n, "nonobtuse").classes:
            assert sign_pattern_check(record.matrix).ok


def _suite_zero_row_sums() -> None:
    # every partly decomposable nonobtuse class, pushed to two-block
    # diagonal form and reflected at any column of the top block, has an
    # inverse transpose whose bottom-block rows sum to zero
    for n in range(1, 6):
        for record in enumerate_classes(n, "nonobtuse").classes:
            P = record.matrix
            if is_fully_indecomposable(P):
                continue
            size = block_triangular_form(P).block_sizes[-1]
            D, _ = block_diagonalize(P)
            for column in range(n - size):
                reflected = xor_reflect(D, column)
                sums = transposed_inverse(reflected).row_sums()
                assert all(s == 0 for s in sums[n - size :])


def test_criterion_10():
    def body():
        _suite_invariance()
        _suite_decomposability_oracle()
        _suite_determinant_oracle()
        _suite_sign_and_facets()
        _suite_zero_row_sums()

    _run(10, "property suites", body)
