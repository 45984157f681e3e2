"""Command-line front end.

Subcommands: ``ring`` (dump a cohomology ring), ``sq`` (dump the Steenrod
table), ``charrank-bound`` (bound ucharrank for one frame), ``theorem-table``
(compare the engine against the closed-form values over parameter ranges),
and ``corollary`` (exhaustive vanishing/classification checks).

Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 invalid input,
3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .rings import COMPLEX, QUATERNION, REAL, FieldTag, build_ring
from .steenrod import SqTable
from .table import DEFAULT_MAX_N, TableResult, run_theorem_table
from .wu import (
    DEFAULT_BRANCH_LIMIT,
    BoundReport,
    BranchLimitExceeded,
    CorollaryResult,
    WitnessVerificationError,
    check_corollary,
    ucharrank_bound,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_GUARD = 3

BRANCH_LIMIT_ENV = "CHARRANK_BRANCH_LIMIT"


def _env_branch_limit() -> int:
    raw = os.environ.get(BRANCH_LIMIT_ENV)
    if raw is None:
        return DEFAULT_BRANCH_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BRANCH_LIMIT_ENV} must be an integer, got {raw!r}")


def _field(value: str) -> FieldTag:
    try:
        return FieldTag(value.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"field must be R, C or H, got {value!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _emit_json(payload: dict, out_path: str | None) -> None:
    _emit(json.dumps(payload, indent=2), out_path)


# ----- subcommand implementations -----


def _cmd_ring(args: argparse.Namespace) -> int:
    ring = build_ring(args.field, args.n, args.k, args.max_degree)
    if args.json:
        _emit_json(ring.to_json_dict(), args.out)
        return EXIT_OK
    lines = [
        f"ring {ring.describe()}  (truncated above degree {ring.max_degree}, "
        f"manifold dimension {ring.manifold_dimension})"
    ]
    gens = ", ".join(
        f"{g.name} (deg {g.degree}, square "
        f"{ring.generator(g.square_label).name if g.square_label is not None else '0'})"
        for g in ring.generators
    )
    lines.append(f"generators: {gens}")
    conn = ring.connectivity_report()
    lines.append(
        f"connectivity: H^i = 0 for 1 <= i <= {conn['zero_in_degrees'][1]}, "
        f"first nonzero degree {conn['first_nonzero_degree']} (verified)"
    )
    for d in range(ring.max_degree + 1):
        if ring.dim(d):
            basis = ", ".join(ring.format_monomial(m) for m in ring.basis(d))
            lines.append(f"  H^{d:<3} dim {ring.dim(d):<3} [{basis}]")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_sq(args: argparse.Namespace) -> int:
    ring = build_ring(args.field, args.n, args.k, args.max_degree)
    table = SqTable(ring)
    payload = table.table_json(max_i=args.max_i)
    if args.json:
        _emit_json(payload, args.out)
        return EXIT_OK
    lines = [f"Steenrod squares on {ring.describe()} basis monomials"]
    for entry in payload["table"]:
        for i, value in entry["squares"].items():
            lines.append(f"  Sq^{i}({entry['monomial']}) = {value}")
    if "assumptions" in payload:
        lines.append("assumptions:")
        lines.extend(f"  {a}" for a in payload["assumptions"])
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _format_bound(report: BoundReport) -> str:
    if report.exact:
        return f"={report.lower}"
    return f"[{report.lower},{report.upper}]"


def _cmd_charrank_bound(args: argparse.Namespace) -> int:
    report = ucharrank_bound(
        args.field,
        args.n,
        args.k,
        rules=() if not args.milnor else None,
        use_witnesses=args.witnesses,
        cap=args.cap,
        branch_limit=args.branch_limit,
    )
    if args.json:
        _emit_json(report.to_json_dict(), args.out)
        return EXIT_OK
    lines = [
        f"ucharrank(V_{args.k}({args.field.value}^{args.n})) "
        f"{_format_bound(report)}"
        + ("" if report.exact else "  (bound only)"),
        f"  lower {report.lower} via {report.witness_id}",
        f"  upper {report.upper} from enumeration "
        f"(stopped at degree {report.trace.stopped_at})",
    ]
    for assumption in report.assumptions:
        lines.append(f"  assumes: {assumption}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_theorem_table(args: argparse.Namespace) -> int:
    fields = (
        (args.field,)
        if args.field is not None
        else (REAL, COMPLEX, QUATERNION)
    )
    max_n = {
        REAL: args.max_n_real,
        COMPLEX: args.max_n_complex,
        QUATERNION: args.max_n_quaternion,
    }
    result = run_theorem_table(max_n, fields, branch_limit=args.branch_limit)
    if args.json:
        _emit_json(result.to_json_dict(), args.out)
    else:
        _emit(_render_table(result), args.out)
    return EXIT_OK if result.all_match else EXIT_MISMATCH


def _render_table(result: TableResult) -> str:
    lines = [f"{'field':<6}{'n':>3}{'k':>3}  {'expected':<10}{'computed':<10}match"]
    for entry in result.entries:
        row = entry.row
        computed = _format_bound(entry.report)
        lines.append(
            f"{row.field.value:<6}{row.n:>3}{row.k:>3}  "
            f"{row.describe_expected():<10}{computed:<10}"
            f"{'ok' if entry.match else 'MISMATCH'}"
        )
    for field, n, k in result.skipped:
        lines.append(
            f"{field.value:<6}{n:>3}{k:>3}  (skipped: outside the closed-form "
            "case analysis)"
        )
    total = len(result.entries)
    good = sum(1 for e in result.entries if e.match)
    lines.append(f"{good}/{total} rows match")
    return "\n".join(lines)


def _cmd_corollary(args: argparse.Namespace) -> int:
    if args.which in (1, 3) and args.k is None:
        raise ValueError(f"corollary {args.which} needs -k")
    if args.field is not None:
        expected = COMPLEX if args.which == 4 else REAL
        if args.field is not expected:
            raise ValueError(
                f"corollary {args.which} is a statement over {expected.value}"
            )
    result = check_corollary(
        args.which, n=args.n, k=args.k, branch_limit=args.branch_limit
    )
    if args.json:
        _emit_json(result.to_json_dict(), args.out)
    else:
        _emit(_render_corollary(result), args.out)
    return EXIT_OK if result.passed else EXIT_MISMATCH


def _render_corollary(result: CorollaryResult) -> str:
    status = "PASS" if result.passed else "FAIL"
    lines = [
        f"corollary {result.which} on V_{result.k}({result.field.value}^{result.n}): "
        f"{status}",
        f"  {result.statement}",
        f"  assignments checked: {result.assignments_checked}",
    ]
    if result.counterexample is not None:
        lines.append(f"  counterexample: {result.counterexample}")
    return "\n".join(lines)


# ----- parser -----


def _add_common(parser: argparse.ArgumentParser, *, field: bool = True) -> None:
    if field:
        parser.add_argument("-F", "--field", type=_field, required=True,
                            help="base field: R, C or H")
    parser.add_argument("-n", type=int, required=True, help="ambient dimension")
    parser.add_argument("-k", type=int, required=True, help="frame size")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE")


def build_parser(default_branch_limit: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charrank",
        description=(
            "Mod-2 cohomology of Stiefel manifolds and characteristic-rank "
            "bounds from Wu-formula constraints."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ring = sub.add_parser("ring", help="dump a truncated cohomology ring")
    _add_common(p_ring)
    p_ring.add_argument("-d", "--max-degree", type=int, default=None,
                        help="truncation bound (default: manifold dimension)")
    _add_output(p_ring)

    p_sq = sub.add_parser("sq", help="dump Steenrod squares on basis monomials")
    _add_common(p_sq)
    p_sq.add_argument("-d", "--max-degree", type=int, default=None,
                      help="truncation bound (default: manifold dimension)")
    p_sq.add_argument("--max-i", type=int, default=None,
                      help="largest Steenrod index to tabulate")
    _add_output(p_sq)

    p_bound = sub.add_parser("charrank-bound", help="bound ucharrank(V_k(F^n))")
    _add_common(p_bound)
    p_bound.add_argument("--milnor", dest="milnor", action="store_true",
                         default=True,
                         help="enable the sphere-restriction rule (default)")
    p_bound.add_argument("--no-milnor", dest="milnor", action="store_false",
                         help="pure Wu bound, no obstruction rules")
    p_bound.add_argument("--witnesses", dest="witnesses", action="store_true",
                         default=True,
                         help="use registry witnesses for lower bounds (default)")
    p_bound.add_argument("--no-witnesses", dest="witnesses", action="store_false")
    p_bound.add_argument("--cap", type=int, default=None,
                         help="enumeration depth cap (default: auto)")
    p_bound.add_argument("--branch-limit", type=int, default=default_branch_limit)
    _add_output(p_bound)

    p_table = sub.add_parser(
        "theorem-table",
        help="compare computed bounds against the closed-form values",
    )
    p_table.add_argument("-F", "--field", type=_field, default=None,
                         help="restrict to one field (default: all)")
    p_table.add_argument("--max-n-real", type=int, default=DEFAULT_MAX_N[REAL])
    p_table.add_argument("--max-n-complex", type=int, default=DEFAULT_MAX_N[COMPLEX])
    p_table.add_argument("--max-n-quaternion", type=int,
                         default=DEFAULT_MAX_N[QUATERNION])
    p_table.add_argument("--branch-limit", type=int, default=default_branch_limit)
    _add_output(p_table)

    p_cor = sub.add_parser("corollary", help="run an exhaustive vanishing check")
    p_cor.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p_cor.add_argument("-F", "--field", type=_field, default=None,
                       help="optional; implied by the corollary index")
    p_cor.add_argument("-n", type=int, required=True)
    p_cor.add_argument("-k", type=int, default=None)
    p_cor.add_argument("--branch-limit", type=int, default=default_branch_limit)
    _add_output(p_cor)

    return parser


_DISPATCH = {
    "ring": _cmd_ring,
    "sq": _cmd_sq,
    "charrank-bound": _cmd_charrank_bound,
    "theorem-table": _cmd_theorem_table,
    "corollary": _cmd_corollary,
}


def main(argv: list[str] | None = None) -> int:
    try:
        default_limit = _env_branch_limit()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    parser = build_parser(default_limit)
    args = parser.parse_args(argv)
    if getattr(args, "max_degree", "missing") is None:
        from .rings import manifold_dimension, validate_parameters

        validate_parameters(args.field, args.n, args.k)
        args.max_degree = manifold_dimension(args.field, args.n, args.k)
    try:
        return _DISPATCH[args.command](args)
    except BranchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except WitnessVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
