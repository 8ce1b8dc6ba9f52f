"""Command-line front end.

Every subcommand prints one JSON object with ``command``, ``input`` and
``results`` keys to standard output; diagnostics go to standard error.
Exact rationals are serialized as ``p/q`` strings so nothing is rounded.
Exit codes: 0 success, 1 analysis error (e.g. singular input where a
nonsingular matrix is required), 2 usage error or malformed matrix file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bitcore import BinMatrix, BinVector
from .canon import canonical_form
from .enumeration import PROPERTY_CHECKS, enumerate_classes, sweep_verify
from .errors import AnalysisError, MatrixFormatError
from .exact import bareiss_determinant, transposed_inverse
from .geometry import Classification, classify, stochastic_split
from .neighbors import NeighborReport, neighbor_search
from .ortho import (
    enumerate_upper_triangular_ortho,
    is_orthogonal_simplex,
    right_dihedral_count,
    spanning_tree,
)
from .selfcheck import run_checks
from .structure import block_triangular_form, indecomposable_components, is_fully_indecomposable


def _frac(x: Fraction) -> str:
    return str(x)


def _vec(v: BinVector) -> str:
    return format(v.bits, f"0{v.n}b")


def _mat(P: BinMatrix) -> list[str]:
    return [format(bits, f"0{P.ncols}b") for bits in P.row_bits]


def _read_matrix(path: str, transpose: bool) -> BinMatrix:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    P = BinMatrix.from_text(text)
    return P.transpose() if transpose else P


def _classification_dict(c: Classification) -> dict:
    out: dict = {
        "verdict": str(c.verdict),
        "acute": c.is_acute,
        "nonobtuse": c.is_nonobtuse,
    }
    if c.witness is not None:
        out["witness"] = list(c.witness)
        out["witness_kind"] = c.witness_kind
    return out


def _cmd_classify(P: BinMatrix) -> dict:
    results = _classification_dict(classify(P))
    det = bareiss_determinant(P)
    results["determinant"] = det
    if det != 0:
        results["fully_indecomposable"] = is_fully_indecomposable(P)
        Q = transposed_inverse(P)
        results["opposite_normal"] = [_frac(s) for s in Q.row_sums()]
        if results["nonobtuse"]:
            split = stochastic_split(Q)
            results["positive_part_column_sums"] = [
                _frac(s) for s in split.positive.column_sums()
            ]
    return results


def _cmd_decompose(P: BinMatrix) -> dict:
    form = block_triangular_form(P)
    decomposition = indecomposable_components(P)
    return {
        "fully_indecomposable": is_fully_indecomposable(P),
        "block_sizes": list(form.block_sizes),
        "block_rows": [list(rows) for rows in form.block_rows],
        "block_columns": [list(cols) for cols in form.block_columns],
        "blocks": [_mat(b) for b in form.blocks],
        "components": [
            {
                "dimension": comp.dimension,
                "vertices": list(comp.vertices),
                "attachment_vertex": comp.attachment,
                "matrix": _mat(comp.matrix),
            }
            for comp in decomposition.components
        ],
    }


def _neighbor_report_dict(report: NeighborReport) -> dict:
    out: dict = {
        "facet": report.facet,
        "interior": report.interior,
        "existing_vertex": _vec(report.existing_vertex),
        "altitude_feet": [_vec(v) for v in report.altitude_feet],
        "candidates": [
            {
                "vertex": _vec(c.vertex),
                "verdict": str(c.verdict),
                "foot_on_facet": c.foot_on_facet,
                "is_existing": c.is_existing,
            }
            for c in report.candidates
        ],
    }
    if report.target is not None:
        out["target"] = report.target
        out["matching_vertices"] = [_vec(v) for v in report.matching_vertices]
    return out


def _cmd_neighbors(P: BinMatrix, facet: str | None, target: str | None) -> dict:
    if facet is None:
        facets = list(range(P.nrows + 1))
    elif facet == "origin":
        facets = [0]
    else:
        try:
            k = int(facet)
        except ValueError:
            raise MatrixFormatError(f"--facet must be 'origin' or an integer, got {facet!r}")
        if not 0 <= k <= P.nrows:
            raise AnalysisError(f"facet {k} out of range 0..{P.nrows}")
        facets = [k]
    return {
        "reports": [
            _neighbor_report_dict(neighbor_search(P, k, target=target))
            for k in facets
        ]
    }


def _cmd_enumerate(n: int, filter_name: str) -> dict:
    result = enumerate_classes(n, filter_name)
    return {
        "n": result.n,
        "filter": result.filter_name,
        "class_count": result.count,
        "verdict_counts": result.verdict_counts(),
        "class_representatives": [_mat(m) for m in result.matrices()],
    }


def _cmd_ortho(n: int) -> dict:
    mats = enumerate_upper_triangular_ortho(n)
    classes: dict[str, dict] = {}
    for P in mats:
        if not is_orthogonal_simplex(P):  # defensive; never expected
            raise AnalysisError("enumerated matrix is not an orthogonal simplex")
        tree = spanning_tree(P)
        bucket = classes.setdefault(
            tree.code,
            {
                "tree_code": tree.code,
                "degree_sequence": list(tree.degree_sequence),
                "count": 0,
                "representative": _mat(P),
            },
        )
        bucket["count"] += 1
    return {
        "n": n,
        "matrix_count": len(mats),
        "right_dihedral_angles": n * (n - 1) // 2,
        "tree_class_count": len(classes),
        "tree_classes": [classes[code] for code in sorted(classes)],
    }


def _cmd_canon(P: BinMatrix) -> dict:
    form = canonical_form(P)
    return {
        "canonical_matrix": _mat(form.matrix),
        "origin_vertex": form.origin,
        "column_permutation": list(form.col_perm),
        "row_permutation": list(form.row_perm),
        "is_canonical": form.matrix == P,
    }


def _cmd_sweep(n: int, property_name: str) -> dict:
    report = sweep_verify(n, property_name)
    out: dict = {
        "n": report.n,
        "property": report.property_name,
        "passed": report.passed,
        "checked": report.checked,
    }
    if report.counterexample is not None:
        out["counterexample"] = _mat(report.counterexample)
        out["detail"] = report.detail
    return out


def _cmd_verify_paper() -> tuple[dict, int]:
    checks = run_checks()
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status} {c.name}: {c.detail}", file=sys.stderr)
    results = {
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "all_passed": all(c.passed for c in checks),
    }
    return results, 0 if results["all_passed"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubesimplex",
        description="Exact analysis of simplices spanned by 0/1 matrix columns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="matrix file: one row of 0/1 characters per line")
        p.add_argument(
            "--transpose", action="store_true", help="analyze the transpose instead"
        )
        return p

    matrix_command("classify", "acute / nonobtuse / obtuse / degenerate verdict")
    matrix_command("decompose", "block triangular form and components")
    p = matrix_command("neighbors", "exhaustive facet neighbor search")
    p.add_argument(
        "--facet",
        help="facet to search: 'origin' or the 1-based opposite-vertex index "
        "(0 is also the origin facet); default all facets",
    )
    p.add_argument(
        "--target", choices=("acute", "nonobtuse"), help="report matching completions"
    )
    matrix_command("canon", "canonical class representative and witness")

    p = sub.add_parser("enumerate", help="enumerate simplex classes of dimension n")
    p.add_argument("n", type=int)
    p.add_argument(
        "--filter",
        default="all",
        help="all, nonobtuse, acute, fully-indecomposable or orthogonal",
    )

    p = sub.add_parser("ortho", help="enumerate orthogonal simplices of dimension n")
    p.add_argument("n", type=int)

    p = sub.add_parser("sweep", help="verify one structural property over all classes")
    p.add_argument("n", type=int)
    p.add_argument("property", choices=sorted(PROPERTY_CHECKS))

    sub.add_parser("verify-paper", help="run every golden check and property sweep")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    input_echo: dict = {}
    exit_code = 0
    try:
        if args.command in ("classify", "decompose", "neighbors", "canon"):
            P = _read_matrix(args.file, args.transpose)
            input_echo = {
                "file": args.file,
                "transpose": args.transpose,
                "matrix": _mat(P),
            }
            if args.command == "classify":
                results = _cmd_classify(P)
            elif args.command == "decompose":
                results = _cmd_decompose(P)
            elif args.command == "neighbors":
                results = _cmd_neighbors(P, args.facet, args.target)
                input_echo["facet"] = args.facet
                input_echo["target"] = args.target
            else:
                results = _cmd_canon(P)
        elif args.command == "enumerate":
            input_echo = {"n": args.n, "filter": args.filter}
            results = _cmd_enumerate(args.n, args.filter)
        elif args.command == "ortho":
            input_echo = {"n": args.n}
            results = _cmd_ortho(args.n)
        elif args.command == "sweep":
            input_echo = {"n": args.n, "property": args.property}
            results = _cmd_sweep(args.n, args.property)
        else:
            results, exit_code = _cmd_verify_paper()
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AnalysisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = {"command": args.command, "input": input_echo, "results": results}
    json.dump(report, sys.stdout, indent=2)
    print()
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
