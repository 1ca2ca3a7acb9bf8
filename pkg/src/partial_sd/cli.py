"""Command-line interface: ``partial-sd <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import verify
from .complex import SimplicialComplex, f_vector, h_vector
from .exact import format_rational
from .localh import local_h
from .permstat import distribution_table
from .spectral import eigen_decompose
from .subdivide import label_dict_to_json, partial_subdivision
from .transform import f_matrix, iterate_h, transform_matrix


class ValidationError(Exception):
    """Bad input that parsed as arguments; reported with exit code 1."""


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _read_complex(path: str) -> SimplicialComplex:
    data = _read_json(path)
    try:
        return SimplicialComplex.from_dict(data)
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"{path}: {exc}") from None


def _check_d(d: int) -> None:
    try:
        verify.check_cap(d)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(args, payload, table=None) -> None:
    """Write ``payload`` as JSON, or ``table`` (a list of rows) as CSV."""
    if args.format == "csv":
        if table is None:
            raise ValidationError(f"{args.command} output has no CSV form; use --format json")
        text = _csv(table)
    else:
        text = json.dumps(payload) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_subdivide(args) -> int:
    K = _read_complex(args.input)
    _check_d(K.d)
    sd, labels = partial_subdivision(K, args.level)
    _emit(args, sd.to_dict())
    if args.dict:
        Path(args.dict).write_text(json.dumps(label_dict_to_json(labels)) + "\n")
    return 0


def cmd_fvector(args) -> int:
    f = f_vector(_read_complex(args.input))
    _emit(args, list(f), [f])
    return 0


def cmd_hvector(args) -> int:
    h = h_vector(_read_complex(args.input))
    _emit(args, list(h), [h])
    return 0


def cmd_matrix(args) -> int:
    _check_d(args.d)
    if args.kind == "f":
        M = f_matrix(args.d, args.level, check_formula=args.check_formula)
    else:
        M = transform_matrix(args.d, args.level, args.kind)
    rows = M.to_rows()
    _emit(args, {"d": args.d, "level": args.level, "kind": args.kind, "rows": rows}, rows)
    return 0


def cmd_eigen(args) -> int:
    _check_d(args.d)
    pairs = eigen_decompose(args.d, args.level, args.kind)
    payload = [
        {"eigenvalue": format_rational(p.eigenvalue), "vectors": [[format_rational(x) for x in v] for v in p.basis]}
        for p in pairs
    ]
    table = [[format_rational(p.eigenvalue)] + [format_rational(x) for x in v] for p in pairs for v in p.basis]
    _emit(args, payload, table)
    return 0


def cmd_stats(args) -> int:
    _check_d(args.d)
    levels = [args.level] if args.level else list(range(args.d - 1, 0, -1))
    cols = {l: distribution_table(args.d, l, args.statistic) for l in levels}
    table = [["value"] + [f"l={l}" for l in levels]]
    table += [[k] + [cols[l][k] for l in levels] for k in range(args.d)]
    payload = {"d": args.d, "statistic": args.statistic, "columns": {str(l): list(c) for l, c in cols.items()}}
    _emit(args, payload, table)
    return 0


def cmd_localh(args) -> int:
    _check_d(args.d)
    c = local_h(args.d, args.level).coefficients
    _emit(args, list(c), [c])
    return 0


def cmd_iterate(args) -> int:
    _check_d(args.d)
    if args.input:
        data = _read_json(args.input)
        if isinstance(data, dict):
            try:
                start = h_vector(SimplicialComplex.from_dict(data))
            except (ValueError, TypeError) as exc:
                raise ValidationError(f"{args.input}: {exc}") from None
        elif isinstance(data, list) and all(isinstance(x, int) for x in data):
            start = tuple(data)
        else:
            raise ValidationError(f"{args.input}: expected an integer array or a complex object")
    else:
        start = (1,) + (0,) * args.d
    if len(start) != args.d + 1:
        raise ValidationError(f"start vector has length {len(start)}, expected d+1 = {args.d + 1}")
    seq = iterate_h(start, args.d, args.level, args.steps)
    _emit(args, [list(h) for h in seq], seq)
    return 0


def cmd_verify(args) -> int:
    rep = verify.run(args.suite)
    text = "\n".join(rep.lines()) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive(s: str) -> int:
    n = int(s)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return n


def _nonnegative(s: str) -> int:
    n = int(s)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partial-sd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, fmt="json"):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write to this file instead of stdout")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default=fmt)
        return p

    p = add("subdivide", cmd_subdivide, "build sd^l of a complex", fmt=None)
    p.set_defaults(format="json")
    p.add_argument("--input", required=True, help="complex JSON, or - for stdin")
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--dict", help="write the vertex label dictionary here")

    for name, func in (("fvector", cmd_fvector), ("hvector", cmd_hvector)):
        p = add(name, func, f"{name[0]}-vector of a complex")
        p.add_argument("--input", required=True, help="complex JSON, or - for stdin")

    p = add("matrix", cmd_matrix, "f- or h-transformation matrix")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--kind", choices=("f", "h"), default="h")
    p.add_argument("--check-formula", action="store_true", help="cross-check f-entries against the closed formula")

    p = add("eigen", cmd_eigen, "exact eigen-decomposition")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--kind", choices=("f", "h"), default="h")

    p = add("stats", cmd_stats, "distribution of a permutation statistic over S_d^l", fmt="csv")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--level", type=_positive, help="single level (default: all levels d-1..1)")
    p.add_argument("--statistic", choices=("descent", "excedance"), default="descent")

    p = add("localh", cmd_localh, "local h-polynomial of sd^l of a simplex")
    p.add_argument("--d", type=_nonnegative, required=True)
    p.add_argument("--level", type=_positive, required=True)

    p = add("iterate", cmd_iterate, "iterate the h-transformation")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--steps", type=_nonnegative, required=True)
    p.add_argument("--input", help="start h-vector as a JSON array, or a complex JSON (default: 1,0,...,0)")

    p = add("verify", cmd_verify, "recompute published tables and structural identities", fmt=None)
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
