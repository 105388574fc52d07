"""Command-line front end.

    moessner sieve --n 1 --take 5
    moessner value --k 50 --n 10 --format json
    moessner triangle --kind delta --i 1 --n 1
    moessner verify --identities I1 I2 --k-max 8 --n-max 8

Exit codes: 0 success, 1 a computed check failed, 2 usage or domain error.
Data goes to stdout; usage text, skip notes and summaries go to stderr.
Integers are always written in full decimal; json and csv carry them as
strings.
"""

import argparse
import contextlib
import csv
import json
import sys

from .errors import ParameterError
from .identities import IDENTITIES, GridRange, verify_grid
from .sieve import M_sieve, moessner_sieve, power_oracle
from .streams import take
from .triangles import default_model

FORMATS = ("plain", "csv", "json")


def _nat(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def _positive(text):
    value = _nat(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _write_csv(out, header, rows):
    w = csv.writer(out, quoting=csv.QUOTE_ALL, lineterminator="\n")
    w.writerow(header)
    w.writerows([[str(v) for v in row] for row in rows])


def _write_json(out, command, params, results):
    doc = {"command": command, "params": params, "results": results}
    out.write(json.dumps(doc, indent=2) + "\n")


def cmd_sieve(args, out, err):
    values = take(moessner_sieve(args.n).stream, args.take)
    if args.format == "plain":
        out.writelines(f"{v}\n" for v in values)
    elif args.format == "csv":
        _write_csv(out, ["position", "value"], enumerate(values, 1))
    else:
        results = [{"position": p, "value": str(v)} for p, v in enumerate(values, 1)]
        _write_json(out, "sieve", {"n": args.n, "take": args.take}, results)
    return 0


def cmd_value(args, out, err):
    k, n = args.k, args.n
    sieved = M_sieve(k, n)
    oracle = power_oracle(k, n)
    parts = default_model().decompose(k, n)
    ok = sieved == oracle == parts.total
    quantities = [("M", sieved), ("oracle", oracle), ("A+B", parts.total),
                  ("A", parts.A), ("B", parts.B)]
    quantities += [(f"delta_{i}", d) for i, d in enumerate(parts.deltas)]
    if args.format == "plain":
        out.writelines(f"{name}={v}\n" for name, v in quantities)
    elif args.format == "csv":
        _write_csv(out, ["quantity", "value"], quantities)
    else:
        result = {"M": str(sieved), "oracle": str(oracle), "A+B": str(parts.total),
                  "A": str(parts.A),
                  "B": str(parts.B), "deltas": [str(d) for d in parts.deltas],
                  "consistent": ok}
        _write_json(out, "value", {"k": k, "n": n}, [result])
    if not ok:
        err.write(f"mismatch: sieve={sieved} oracle={oracle} A+B={parts.total}\n")
    return 0 if ok else 1


def cmd_triangle(args, out, err):
    model = default_model()
    if args.kind == "f":
        tri = model.f_triangle(args.n)
    else:
        if args.i is None:
            raise ParameterError(f"--i is required for --kind {args.kind}")
        build = model.delta_triangle if args.kind == "delta" else model.h_triangle
        tri = build(args.i, args.n)
    if args.format == "plain":
        for m, (row, s) in enumerate(zip(tri.rows, tri.row_sums)):
            out.write(f"row {m}: {' '.join(map(str, row))} | sum {s}\n")
        out.write(f"total {tri.total}\n")
    elif args.format == "csv":
        rows = [[m, " ".join(map(str, row)), s]
                for m, (row, s) in enumerate(zip(tri.rows, tri.row_sums))]
        rows.append(["total", "", tri.total])
        _write_csv(out, ["row", "entries", "row_sum"], rows)
    else:
        results = [{"row": m, "entries": [str(v) for v in row], "row_sum": str(s)}
                   for m, (row, s) in enumerate(zip(tri.rows, tri.row_sums))]
        params = {"kind": args.kind, "n": args.n}
        if args.kind != "f":
            params["i"] = args.i
        doc_results = {"rows": results, "total": str(tri.total)}
        _write_json(out, "triangle", params, [doc_results])
    return 0


def _parse_ids(tokens):
    ids = [t.strip() for tok in tokens for t in tok.split(",") if t.strip()]
    if any(t.lower() == "all" for t in ids):
        return list(IDENTITIES)
    unknown = [t for t in ids if t not in IDENTITIES]
    if unknown:
        raise ParameterError(f"unknown identity id(s): {', '.join(unknown)}")
    return ids


def cmd_verify(args, out, err):
    ids = _parse_ids(args.identities)
    grid = None
    if args.k_max is not None or args.n_max is not None:
        grid = GridRange(k_max=8 if args.k_max is None else args.k_max,
                         n_max=8 if args.n_max is None else args.n_max)
    reports = verify_grid(ids, grid, fail_fast=args.fail_fast)

    def cell_text(r):
        return " ".join(f"{a}={v}" for a, v in r.cell)

    def num(v):
        return "" if v is None else str(v)

    if args.format == "plain":
        for r in reports:
            out.write(f"{r.identity} {cell_text(r)} lhs={num(r.lhs)} rhs={num(r.rhs)} {r.status}\n")
    elif args.format == "csv":
        _write_csv(out, ["identity", "cell", "lhs", "rhs", "status"],
                   [[r.identity, cell_text(r), num(r.lhs), num(r.rhs), r.status] for r in reports])
    else:
        results = [{"identity": r.identity, "cell": dict(r.cell),
                    "lhs": None if r.lhs is None else str(r.lhs),
                    "rhs": None if r.rhs is None else str(r.rhs),
                    "status": r.status} for r in reports]
        params = {"identities": ids, "k_max": args.k_max, "n_max": args.n_max,
                  "fail_fast": args.fail_fast}
        _write_json(out, "verify", params, results)

    counts = {s: sum(r.status == s for r in reports) for s in ("pass", "fail", "skip")}
    skipped = {}
    for r in reports:
        if r.status == "skip":
            skipped.setdefault(r.identity, []).append(r)
    for ident, rs in skipped.items():
        err.write(f"{ident}: skipped {len(rs)} out-of-domain cell(s), e.g. {cell_text(rs[0])}: {rs[0].note}\n")
    err.write(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped\n")
    return 1 if counts["fail"] else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="moessner", description="Moessner's sieve toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("sieve", help="emit a prefix of the sieved stream")
    p.add_argument("--n", type=_nat, required=True)
    p.add_argument("--take", type=_positive, required=True)
    add_format(p)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("value", help="M(k,n) by sieve, oracle and triangle decomposition")
    p.add_argument("--k", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)
    add_format(p)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("triangle", help="dump an f, delta or h staircase")
    p.add_argument("--kind", choices=("f", "delta", "h"), required=True)
    p.add_argument("--i", type=_nat)
    p.add_argument("--n", type=_nat, required=True)
    add_format(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="check identities on a finite grid")
    p.add_argument("--identities", nargs="+", default=["all"],
                   help="ids such as I1 I2 or I1,I2, or 'all'")
    p.add_argument("--k-max", type=_nat)
    p.add_argument("--n-max", type=_nat)
    p.add_argument("--fail-fast", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        # --help goes to the data channel, parse errors to the diagnostic one
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out, err)
    except ParameterError as exc:
        parser.print_usage(err)
        err.write(f"moessner {args.command}: error: {exc}\n")
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
