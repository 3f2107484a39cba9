"""Command-line front end.

Subcommands::

    construct      build the companion-type matrix for (f, diagonal)
    verify         re-check a previously emitted construct report
    charpoly       characteristic polynomial of the constructed matrix, two ways
    companion      the plain companion matrix of f
    solve-backsub  last column via the minor-system back-substitution
    uniqueness     exhaustive last-column count over GF(p)
    minors         the minor-sum equation system of the constructed matrix

Polynomials are entered as the low-to-high coefficient list "c0,c1,..."
with the leading 1 implicit, so ``--poly "-1,0"`` means t^2 - 1.  Field
elements print as "num/den" over Q and as residues 0..p-1 over GF(p).

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
3 enumeration budget exceeded.  Reports go to stdout (or --out FILE),
errors to stderr.  Passing --seed makes the report byte-reproducible:
the elapsed_ms field is emitted as 0.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field

from .construct import (
    check_similarity,
    companion,
    construct_full,
    derive_last_diagonal,
    similarity_T,
    validate_diagonal,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InvalidArgument,
    TraceMismatch,
    WrongField,
)
from .fields import Field, PrimeField, parse_field
from .matrices import DiagonalSpec, StructuredMatrix
from .oracles import (
    charpoly_generic,
    charpoly_structured,
    check_minor_system,
    solve_b_backsub,
    uniqueness_exhaustive,
)
from .poly import MonicPoly

__all__ = ["JobConfig", "parse_args", "run", "main"]

DEFAULT_BUDGET = 10**6


@dataclass
class JobConfig:
    command: str
    fmt: str
    budget: int
    seed: int | None
    out: str | None
    field: Field | None = None
    poly: MonicPoly | None = None
    diag: tuple | None = None
    diag_head: tuple | None = None
    report_path: str | None = None
    input_echo: dict = dc_field(default_factory=dict)


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _add_common(sub, *, poly=True, diagonal=True, budget=False):
    sub.add_argument("--field", required=True, metavar="Q|GF:p",
                     help="field code: Q for rationals, GF:p for a prime field")
    if poly:
        sub.add_argument("--poly", required=True, metavar="c0,c1,...",
                         help="coefficients c_0..c_{n-1}, low to high, monic leader implicit")
    if diagonal:
        group = sub.add_mutually_exclusive_group(required=True)
        group.add_argument("--diag", metavar="d1,...,dn",
                           help="all n diagonal entries (validated against the trace constraint)")
        group.add_argument("--diag-head", metavar="d1,...,d_{n-1}",
                           help="first n-1 entries; d_n is derived (empty string for n = 1)")
    if budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N",
                         help=f"enumeration candidate cap (default {DEFAULT_BUDGET})")
    sub.add_argument("--format", choices=("json", "text"), default="json",
                     dest="fmt", help="report format (default json)")
    sub.add_argument("--seed", type=int, default=None, metavar="N",
                     help="fix the seed; also zeroes elapsed_ms so output is byte-stable")
    sub.add_argument("--out", metavar="FILE", default=None,
                     help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagcomp",
        description="companion-type matrices with a prescribed diagonal",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    _add_common(subs.add_parser(
        "construct", help="build the matrix and verify it"))
    verify = subs.add_parser("verify", help="re-check an emitted construct report")
    verify.add_argument("report", metavar="REPORT",
                        help="path of a construct JSON report, or - for stdin")
    verify.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    verify.add_argument("--seed", type=int, default=None, metavar="N")
    verify.add_argument("--out", metavar="FILE", default=None)
    _add_common(subs.add_parser(
        "charpoly", help="characteristic polynomial of the constructed matrix"))
    _add_common(subs.add_parser(
        "companion", help="companion matrix of the polynomial"), diagonal=False)
    _add_common(subs.add_parser(
        "solve-backsub", help="last column via minor-system back-substitution"))
    _add_common(subs.add_parser(
        "uniqueness", help="exhaustive last-column count over GF(p)"), budget=True)
    _add_common(subs.add_parser(
        "minors", help="minor-sum equation system of the constructed matrix"))
    return parser


def _parse_elements(field: Field, text: str, flag: str):
    text = text.strip()
    if not text:
        return ()
    out = []
    for pos, item in enumerate(text.split(","), 1):
        try:
            out.append(field.parse(item))
        except InvalidArgument as exc:
            raise InvalidArgument(f"{flag}: {exc} (position {pos})") from None
    return tuple(out)


def parse_args(argv) -> JobConfig:
    """Parse and fully validate argv into a JobConfig.

    argparse itself exits with code 2 on unknown flags; value errors
    (bad field code, bad literals, wrong diagonal length) raise
    InvalidArgument/DimensionMismatch, which main() maps to exit 2.
    """
    args = build_parser().parse_args(argv)
    job = JobConfig(
        command=args.command,
        fmt=args.fmt,
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        seed=args.seed,
        out=args.out,
    )
    if job.budget <= 0:
        raise InvalidArgument(f"--budget: must be positive, got {job.budget}")

    echo = {"command": args.command}
    if job.command == "verify":
        job.report_path = args.report
        echo["report"] = args.report
    else:
        try:
            job.field = parse_field(args.field)
        except InvalidArgument as exc:
            raise InvalidArgument(f"--field: {exc}") from None
        echo["field"] = job.field.code
        coeffs = _parse_elements(job.field, args.poly, "--poly")
        if not coeffs:
            raise InvalidArgument("--poly: needs at least one coefficient")
        job.poly = MonicPoly(job.field, coeffs)
        echo["poly"] = args.poly
        n = job.poly.degree
        if getattr(args, "diag", None) is not None:
            job.diag = _parse_elements(job.field, args.diag, "--diag")
            if len(job.diag) != n:
                raise DimensionMismatch(
                    f"--diag: expected {n} entries for degree {n}, got {len(job.diag)}")
            echo["diag"] = args.diag
        elif getattr(args, "diag_head", None) is not None:
            job.diag_head = _parse_elements(job.field, args.diag_head, "--diag-head")
            if len(job.diag_head) != n - 1:
                raise DimensionMismatch(
                    f"--diag-head: expected {n - 1} entries for degree {n}, "
                    f"got {len(job.diag_head)}")
            echo["diag_head"] = args.diag_head
    if job.command == "uniqueness":
        echo["budget"] = job.budget
    if job.seed is not None:
        echo["seed"] = job.seed
    job.input_echo = echo
    return job


# --------------------------------------------------------------------------
# report rendering
# --------------------------------------------------------------------------

def _to_text(payload: dict) -> str:
    lines = []

    def scalar(value):
        if isinstance(value, bool):
            return "true" if value else "false"
        if value is None:
            return "null"
        return str(value)

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, depth + 1)
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            lines.append(f"{pad}{key}:")
            width = max(len(s) for row in value for s in row)
            for row in value:
                lines.append(pad + "  [ " + "  ".join(s.rjust(width) for s in row) + " ]")
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{key}:")
            for item in value:
                body = "  ".join(f"{k}={scalar(v)}" for k, v in item.items())
                lines.append(f"{pad}  {body}")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + (", ".join(scalar(v) for v in value) if value else "(none)"))
        else:
            lines.append(f"{pad}{key}: {scalar(value)}")

    for k, v in payload.items():
        emit(k, v, 0)
    return "\n".join(lines) + "\n"


def _emit(job: JobConfig, payload: dict, started: float) -> None:
    payload["elapsed_ms"] = 0.0 if job.seed is not None else round(
        (time.perf_counter() - started) * 1000.0, 3)
    if job.fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _to_text(payload)
    if job.out:
        with open(job.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommand bodies: each returns (payload, ok)
# --------------------------------------------------------------------------

def _resolve_diagonal(job: JobConfig) -> DiagonalSpec:
    if job.diag is not None:
        d = DiagonalSpec(job.field, job.diag)
        validate_diagonal(job.poly, d)
        return d
    return derive_last_diagonal(job.poly, job.diag_head)


def _strs(elems):
    return [str(x) for x in elems]


def _cmd_construct(job: JobConfig):
    f = job.poly
    res = construct_full(f, diag=job.diag, diag_head=job.diag_head)
    minor_ok = check_minor_system(res.A, f).all_satisfied
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "d": _strs(res.d.entries),
    }
    if job.diag_head is not None:
        payload["d_n"] = str(res.d.entries[-1])
    payload.update({
        "b": _strs(res.b),
        "A": res.A.to_dense().to_strings(),
        "checks": {
            "charpoly_roundtrip": res.charpoly_roundtrip,
            "similarity_ATTC": res.similarity,
            "minor_system": minor_ok,
        },
    })
    ok = res.charpoly_roundtrip and res.similarity and minor_ok
    if not ok:
        _report_failures(payload["checks"])
    return payload, ok


def _structured_from_strings(field: Field, rows_text) -> StructuredMatrix:
    n = len(rows_text)
    if n == 0 or any(len(r) != n for r in rows_text):
        raise InvalidArgument("report field A must be a nonempty square matrix")
    rows = [[field.parse(s) for s in row] for row in rows_text]
    one = field.one()
    for i in range(n):
        for j in range(n):
            if i == j or (j == n - 1 and i < n - 1):
                continue
            if i == j + 1:
                if rows[i][j] != one:
                    raise InvalidArgument(
                        f"A is not companion-type: entry ({i + 1},{j + 1}) must be 1")
            elif not rows[i][j].is_zero():
                raise InvalidArgument(
                    f"A is not companion-type: entry ({i + 1},{j + 1}) must be 0")
    return StructuredMatrix(field,
                            [rows[i][i] for i in range(n)],
                            [rows[i][n - 1] for i in range(n - 1)])


def _cmd_verify(job: JobConfig):
    if job.report_path == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(job.report_path) as fh:
                raw = fh.read()
        except OSError as exc:
            raise InvalidArgument(f"cannot read report: {exc}") from None
    try:
        report = json.loads(raw)
        field = parse_field(report["field"])
        f = MonicPoly(field, _parse_elements(field, report["input"]["poly"], "input.poly"))
        A = _structured_from_strings(field, report["A"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InvalidArgument(f"malformed construct report: {exc}") from None
    if A.n != f.degree:
        raise DimensionMismatch(
            f"report matrix is {A.n} x {A.n} but the polynomial has degree {f.degree}")
    d = DiagonalSpec(field, A.diag)
    checks = {
        "charpoly_roundtrip": charpoly_structured(A) == f,
        "similarity_ATTC": check_similarity(A, similarity_T(d), companion(f)),
        "minor_system": check_minor_system(A, f).all_satisfied,
    }
    payload = {
        "input": job.input_echo,
        "n": A.n,
        "field": field.code,
        "d": _strs(A.diag),
        "b": _strs(A.last_col),
        "A": A.to_dense().to_strings(),
        "checks": checks,
    }
    ok = all(checks.values())
    if not ok:
        _report_failures(checks)
    return payload, ok


def _cmd_charpoly(job: JobConfig):
    f = job.poly
    d = _resolve_diagonal(job)
    res = construct_full(f, diag=d)
    structured = charpoly_structured(res.A)
    generic = charpoly_generic(res.A.to_dense())
    checks = {
        "agree": structured == generic,
        "matches_input": structured == f,
    }
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "d": _strs(res.d.entries),
        "b": _strs(res.b),
        "charpoly_structured": _strs(structured.coeffs),
        "charpoly_generic": _strs(generic.coeffs),
        "pretty": structured.pretty(),
        "checks": checks,
    }
    ok = all(checks.values())
    if not ok:
        _report_failures(checks)
    return payload, ok


def _cmd_companion(job: JobConfig):
    f = job.poly
    C = companion(f)
    checks = {"matches_input": charpoly_generic(C) == f}
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "C": C.to_strings(),
        "checks": checks,
    }
    ok = checks["matches_input"]
    if not ok:
        _report_failures(checks)
    return payload, ok


def _cmd_solve_backsub(job: JobConfig):
    f = job.poly
    d = _resolve_diagonal(job)
    b_system = solve_b_backsub(f, d)
    b_closed = construct_full(f, diag=d).b
    checks = {"agree": b_system == b_closed}
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "d": _strs(d.entries),
        "b": _strs(b_system),
        "b_closed_form": _strs(b_closed),
        "checks": checks,
    }
    ok = checks["agree"]
    if not ok:
        _report_failures(checks)
    return payload, ok


def _cmd_uniqueness(job: JobConfig):
    f = job.poly
    if not isinstance(job.field, PrimeField):
        raise WrongField("uniqueness enumeration needs GF(p), not Q")
    d = _resolve_diagonal(job)
    p = job.field.modulus
    solutions = uniqueness_exhaustive(f, d, budget=job.budget)
    checks = {"unique": solutions == 1}
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "d": _strs(d.entries),
        "candidates": p ** (f.degree - 1),
        "solutions": solutions,
        "checks": checks,
    }
    ok = checks["unique"]
    if not ok:
        _report_failures(checks)
    return payload, ok


def _cmd_minors(job: JobConfig):
    f = job.poly
    d = _resolve_diagonal(job)
    res = construct_full(f, diag=d)
    report = check_minor_system(res.A, f)
    checks = {"minor_system": report.all_satisfied}
    payload = {
        "input": job.input_echo,
        "n": f.degree,
        "field": job.field.code,
        "d": _strs(res.d.entries),
        "b": _strs(res.b),
        "system": [
            {"k": eq.k, "size": eq.size, "lhs": str(eq.lhs), "rhs": str(eq.rhs),
             "satisfied": eq.satisfied}
            for eq in report.equations
        ],
        "checks": checks,
    }
    ok = checks["minor_system"]
    if not ok:
        _report_failures(checks)
    return payload, ok


def _report_failures(checks: dict) -> None:
    failing = [name for name, ok in checks.items() if not ok]
    print("failed checks: " + ", ".join(failing), file=sys.stderr)


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "charpoly": _cmd_charpoly,
    "companion": _cmd_companion,
    "solve-backsub": _cmd_solve_backsub,
    "uniqueness": _cmd_uniqueness,
    "minors": _cmd_minors,
}


def run(job: JobConfig) -> int:
    """Execute a parsed job; emits the report and returns the exit code."""
    started = time.perf_counter()
    payload, ok = _HANDLERS[job.command](job)
    _emit(job, payload, started)
    return 0 if ok else 1


def main(argv=None) -> int:
    try:
        job = parse_args(argv)
    except (InvalidArgument, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(job)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TraceMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidArgument, DimensionMismatch, FieldMismatch, WrongField) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
