"""Self-contained verification suite behind the ``verify-paper`` command.

Runs every golden matrix check and the small-dimension property sweeps and
reports one named result per check.  The full run stays well under a minute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import golden
from .bitcore import BinMatrix, apply_ops, xor_reflect
from .canon import equivalent
from .enumeration import enumerate_classes, sweep_verify
from .exact import bareiss_determinant, gram, transposed_inverse
from .geometry import classify, stochastic_split
from .neighbors import neighbor_search
from .ortho import enumerate_upper_triangular_ortho, is_orthogonal_simplex
from .structure import block_triangular_form, is_fully_indecomposable


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def _acute_7() -> str:
    P = golden.ACUTE_7
    _check(classify(P).is_acute, "matrix should classify acute")
    Q = transposed_inverse(P)
    want = golden.scaled_inverse_transpose(
        golden.ACUTE_7_INVERSE_T_NUMERATORS, golden.ACUTE_7_SCALE
    )
    _check(Q.entries == want, "transposed inverse differs from pinned matrix")
    _check(abs(bareiss_determinant(P)) == 13, "determinant magnitude should be 13")
    split = stochastic_split(Q)
    one = Fraction(1)
    _check(
        all(s == one for s in split.positive.row_sums())
        and all(s == one for s in split.positive.column_sums()),
        "positive part should be doubly stochastic",
    )
    _check(
        split.negated_negative.column_sums()[2] == Fraction(14, 13),
        "third column of negated negative part should sum to 14/13",
    )
    _check(not classify(P.transpose()).is_acute, "transpose should not be acute")
    return "acute verdict, pinned inverse, |det|=13, stochastic split, transpose"


def _mixed_7() -> str:
    P = golden.MIXED_7
    verdict = classify(P)
    _check(verdict.is_nonobtuse and not verdict.is_acute, "should be nonobtuse only")
    Q = transposed_inverse(P)
    want = golden.scaled_inverse_transpose(
        golden.MIXED_7_INVERSE_T_NUMERATORS, golden.MIXED_7_SCALE
    )
    _check(Q.entries == want, "transposed inverse differs from pinned matrix")
    _check(not is_fully_indecomposable(P), "should be partly decomposable")
    form = block_triangular_form(P)
    _check(form.block_sizes == (1, 1, 1, 1, 3), "block sizes should be 1,1,1,1,3")
    split = stochastic_split(Q)
    supp_d = split.positive.support()
    supp_p = P.support()
    _check(supp_d < supp_p, "positive-part support should be strictly inside P's")
    return "nonobtuse verdict, pinned inverse, blocks (1,1,1,1,3), support"


def _indecomposable_9() -> str:
    P = golden.INDECOMPOSABLE_9
    verdict = classify(P)
    _check(verdict.is_nonobtuse and not verdict.is_acute, "should be nonobtuse only")
    _check(is_fully_indecomposable(P), "should be fully indecomposable")
    q = transposed_inverse(P).row_sums()
    _check(q == golden.INDECOMPOSABLE_9_OPPOSITE_NORMAL, "opposite normal differs")
    G = gram(P)
    for i in range(9):
        for j in range(9):
            _check(G[i][j] >= (2 if i == j else 1), "Gram bound violated")
    return "fully indecomposable nonobtuse non-acute witness, normal, Gram bound"


def _tetrahedron_classes() -> str:
    reps = golden.TETRAHEDRON_REPS_3
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            _check(equivalent(reps[i], reps[j]), f"reps {i} and {j} should match")
    _check(
        enumerate_classes(3).count == 4, "dimension 3 should have 4 classes"
    )
    return "four representations pairwise equivalent; 4 classes in dimension 3"


def _reflect_chain() -> str:
    chain = golden.REFLECT_CHAIN_7
    M = chain[0]
    for step, ops in enumerate(golden.REFLECT_CHAIN_7_OPS):
        M = apply_ops(M, ops)
        _check(M == chain[step + 1], f"chain step {step} mismatch")
    block = chain[1]
    for i in range(4):
        for j in range(4, 7):
            _check(block.entry(i, j) == 0 and block.entry(j, i) == 0,
                   "first reflection should be block diagonal")
    _check(chain[4] == xor_reflect(chain[0], 5), "chain end should equal direct reflection")
    return "five-matrix reflection chain replays; block diagonal midpoint"


def _ortho_counts() -> str:
    for n in range(1, 7):
        mats = enumerate_upper_triangular_ortho(n)
        _check(len(mats) == math.factorial(n), f"count at n={n} should be {n}!")
        _check(
            all(is_orthogonal_simplex(m) for m in mats),
            f"all dimension-{n} outputs should be orthogonal",
        )
    return "upper-triangular counts 1,2,6,24,120,720; all recognized orthogonal"


def _obtuse_projection() -> str:
    report = neighbor_search(golden.OBTUSE_5, 0)
    feet = sorted(v.to_tuple() for v in report.altitude_feet)
    _check(
        feet == sorted(golden.OBTUSE_5_PROJECTING_VERTICES),
        "exactly four vertices should project onto the facet",
    )
    return "four cube vertices project onto the facet opposite the origin"


def _indecomposable_sweep() -> str:
    for n in range(1, 6):
        report = sweep_verify(n, "thm6.8-fi-implies-acute")
        _check(report.passed, f"sweep failed at n={n}: {report.detail}")
    return "no fully indecomposable nonobtuse non-acute class for n <= 5"


def _one_neighbor_sweeps() -> str:
    for n in range(1, 6):
        for prop in ("one-neighbor-acute", "one-neighbor-all-acute-components"):
            report = sweep_verify(n, prop)
            _check(report.passed, f"{prop} failed at n={n}: {report.detail}")
    return "one-neighbor properties hold for all enumerated classes n <= 5"


def _property_sweeps() -> str:
    for n in range(1, 6):
        for prop in ("thm3.1-sign", "thm4.1-strips", "lem6.6-gram", "fiedler-facets"):
            report = sweep_verify(n, prop)
            _check(report.passed, f"{prop} failed at n={n}: {report.detail}")
    return "sign-structure, strip, Gram, and facet sweeps hold for n <= 5"


_CHECKS: tuple[tuple[str, Callable[[], str]], ...] = (
    ("acute-7x7-goldens", _acute_7),
    ("mixed-7x7-goldens", _mixed_7),
    ("indecomposable-9x9-goldens", _indecomposable_9),
    ("tetrahedron-classes", _tetrahedron_classes),
    ("reflection-chain", _reflect_chain),
    ("orthogonal-counts", _ortho_counts),
    ("obtuse-5x5-projection", _obtuse_projection),
    ("indecomposable-implies-acute-sweep", _indecomposable_sweep),
    ("one-neighbor-sweeps", _one_neighbor_sweeps),
    ("property-sweeps", _property_sweeps),
)


def run_checks() -> list[CheckResult]:
    """Run every registered check; never raises, returns one result per check."""
    results = []
    for name, func in _CHECKS:
        try:
            detail = func()
            results.append(CheckResult(name=name, passed=True, detail=detail))
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            results.append(CheckResult(name=name, passed=False, detail=str(exc)))
    return results
