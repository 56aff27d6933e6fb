"""Command line: ``zbeta compute|alexander|zg|verify|export``.

Exit codes: 0 success (all checks pass), 1 a verification failed,
2 bad input or usage.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from zbeta.algebra import render_expr
from zbeta.errors import ZBetaError
from zbeta.metamonoid import DEFAULT_SEED
from zbeta.oracle import canonical_unit_form, wirtinger_alexander
from zbeta.tangle import PDCode, parse_pd, read_table, stitch_plan, z_beta, z_g
from zbeta.verify import axioms_suite, reidemeister_suite, table_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help='inline PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"')
    src.add_argument("--name", help="knot name looked up in the table")
    src.add_argument("--file", help="file holding a PD code")
    p.add_argument("--table", help="knot table (name<TAB>pd); defaults to $ZBETA_TABLE or the shipped table")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zbeta", description="beta-calculus tangle invariant")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("compute", "compute Z^beta"), ("export", "write Z^beta as JSON")):
        p = sub.add_parser(name, help=text)
        _add_source(p)
        p.add_argument("--stop-after", type=int, help="apply only the first N stitching steps")
        p.add_argument(
            "--basepoint", type=int, action="append", help="edge to cut each component at (repeat per component)"
        )
        if name == "compute":
            _add_format(p)
        else:
            p.add_argument("--output", "-o", required=True, help="destination file ('-' for stdout)")

    p = sub.add_parser("alexander", help="Alexander polynomial from the arc/crossing matrix")
    _add_source(p)
    _add_format(p)

    p = sub.add_parser("zg", help="signed over/under passage counts per component")
    _add_source(p)
    _add_format(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("axioms", "reidemeister", "table"), required=True)
    p.add_argument("--table", help="knot table for --suite table")
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000, help="random trials per integer-matrix axiom")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--timings", action="store_true", help="append per-knot run times (not deterministic)")
    _add_format(p)
    return parser


def _load_pd(args) -> PDCode:
    if args.pd is not None:
        return parse_pd(args.pd)
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return parse_pd(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    try:
        table = read_table(args.table)
    except OSError as exc:
        raise InputError(f"cannot read table: {exc}") from exc
    if args.name not in table:
        raise InputError(f"no knot named {args.name!r} in the table")
    return parse_pd(table[args.name])


def _compute(args):
    pd = _load_pd(args)
    plan = stitch_plan(pd, args.basepoint)
    if args.stop_after is not None and args.stop_after < 0:
        raise InputError("--stop-after must be non-negative")
    return z_beta(pd, plan, args.stop_after)


def cmd_compute(args, out) -> int:
    element = _compute(args)
    if args.format == "json":
        out.write(json.dumps(element.to_json(), sort_keys=True) + "\n")
    else:
        out.write(element.pretty() + "\n")
    return EXIT_OK


def cmd_export(args, out) -> int:
    element = _compute(args)
    text = json.dumps(element.to_json(), sort_keys=True, indent=2) + "\n"
    if args.output == "-":
        out.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {args.output}: {exc.strerror}") from exc
    return EXIT_OK


def cmd_alexander(args, out) -> int:
    delta = canonical_unit_form(wirtinger_alexander(_load_pd(args)))
    if args.format == "json":
        out.write(json.dumps({"alexander": render_expr(delta)}) + "\n")
    else:
        out.write(render_expr(delta) + "\n")
    return EXIT_OK


def cmd_zg(args, out) -> int:
    profile = z_g(_load_pd(args))
    if args.format == "json":
        data = {"components": [{"label": k, "over": a, "under": b} for k, (a, b) in zip(profile.labels, profile.counts)]}
        out.write(json.dumps(data) + "\n")
    else:
        out.write(str(profile) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.trials < 1:
        raise InputError("--trials must be positive")
    if args.suite == "axioms":
        result = axioms_suite(args.trials, args.seed)
    elif args.suite == "reidemeister":
        result = reidemeister_suite()
    else:
        try:
            table = read_table(args.table)
        except OSError as exc:
            raise InputError(f"cannot read table: {exc}") from exc
        result = table_suite(table, args.max_crossings, args.timings)
    if args.format == "json":
        out.write(json.dumps(result.to_json(), sort_keys=True) + "\n")
    else:
        out.write("\n".join(result.lines) + "\n")
        out.write(f"{result.name}: {'ALL PASS' if result.passed else 'FAILURES'}\n")
    return EXIT_OK if result.passed else EXIT_FAIL


COMMANDS = {
    "compute": cmd_compute,
    "export": cmd_export,
    "alexander": cmd_alexander,
    "zg": cmd_zg,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, ZBetaError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
