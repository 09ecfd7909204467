"""Command-line front end.

    altruns triangle U --rows 5 --format bfile
    altruns poly R --n 5 --format csv
    altruns oracle alt_runs --n 8
    altruns verify all --max-n 12

Exit codes: 0 when every requested check passes, 1 when any check fails,
2 on usage errors (including exceeded brute-force bounds). Data goes to
stdout only once it is complete, so an error never leaves partial output.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, TextIO

from .errors import BoundExceeded, UnsupportedIndex
from .families import FAMILIES, family_poly
from .gf import MAX_ORDER, GfId, verify_gf
from .identities import IdentityId, identity_range, verify_identity
from .oracles import ROW_STATS, oracle_row
from .report import VerificationReport
from .triangles import triangle

FORMATS = ("csv", "json", "bfile", "pretty")
TRIANGLES = ("U", "V", "S2", "R")
VERIFY_TARGETS = ("all", "gf") + tuple(i.value for i in IdentityId) + tuple(g.value for g in GfId)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _bfile(values: Sequence[int], start: int) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, start))


def _csv_line(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# subcommands -------------------------------------------------------------------

def _cmd_triangle(args) -> tuple[int, str]:
    tri = triangle(args.name, args.rows)
    if args.format == "bfile":
        return 0, _bfile(tri.flatten(), 1)
    if args.format == "csv":
        return 0, "".join(_csv_line([tri.row_start + i, *row]) for i, row in enumerate(tri.rows))
    if args.format == "json":
        return 0, _json({
            "triangle": tri.name,
            "row_start": tri.row_start,
            "col_start": tri.col_start,
            "rows": [[str(v) for v in row] for row in tri.rows],
        })
    width = max((len(str(v)) for v in tri.flatten()), default=1)
    lines = [f"{tri.row_start + i:>3} | " + " ".join(f"{v:>{width}}" for v in row)
             for i, row in enumerate(tri.rows)]
    return 0, "".join(line + "\n" for line in lines)


def _cmd_poly(args) -> tuple[int, str]:
    p = family_poly(args.family, args.n)
    coeffs = p.integer_coeffs(f"{args.family}_{args.n}")
    if args.format == "bfile":
        return 0, _bfile(coeffs, 0)
    if args.format == "csv":
        return 0, _csv_line([args.n, *coeffs])
    if args.format == "json":
        return 0, _json({"family": args.family, "n": args.n, "coefficients": [str(c) for c in coeffs]})
    return 0, f"{args.family}_{args.n}(x) = {p}\n"


def _cmd_oracle(args) -> tuple[int, str]:
    row = oracle_row(args.n, args.statistic, workers=args.workers)
    if args.format == "bfile":
        return 0, _bfile(row.counts, 0)
    if args.format == "csv":
        return 0, _csv_line([row.n, *row.counts])
    if args.format == "json":
        return 0, _json({"statistic": row.statistic, "n": row.n, "counts": [str(c) for c in row.counts]})
    return 0, f"{row.statistic} n={row.n}: " + " ".join(str(c) for c in row.counts) + "\n"


def verify_tasks(target: str, max_n: int, min_n: int | None = None,
                 order: int = MAX_ORDER) -> list[tuple[str, str, int]]:
    """Expand a verify target into ordered ``(kind, id, index)`` tasks."""
    tasks: list[tuple[str, str, int]] = []
    identities: list[IdentityId] = []
    gfs: list[GfId] = []
    if target == "all":
        identities, gfs = list(IdentityId), list(GfId)
    elif target == "gf":
        gfs = list(GfId)
    elif target in IdentityId.__members__:
        identities = [IdentityId(target)]
    elif target in GfId.__members__:
        gfs = [GfId(target)]
    else:
        raise UsageError(f"unknown verify target {target!r}")
    for ident in identities:
        for n in identity_range(ident, max_n):
            if min_n is None or n >= min_n:
                tasks.append(("identity", ident.value, n))
    for g in gfs:
        tasks.append(("gf", g.value, order))
    return tasks


def run_task(task: tuple[str, str, int]) -> VerificationReport:
    kind, name, index = task
    if kind == "identity":
        return verify_identity(name, index)
    return verify_gf(name, index)


def _cmd_verify(args) -> tuple[int, str]:
    target = args.target
    if args.gf:
        if target not in (None, "gf") and target not in GfId.__members__:
            raise UsageError("--gf cannot be combined with an identity target")
        target = target or "gf"
    if target is None:
        raise UsageError("verify needs a target (or --gf)")
    tasks = verify_tasks(target, args.max_n, args.min_n, args.order)
    if not tasks:
        raise UsageError(f"no indices to check for {target} with --max-n {args.max_n}")
    # Raise bound errors before any work is done.
    if any(kind == "gf" for kind, _, _ in tasks) and args.order > MAX_ORDER:
        raise BoundExceeded(f"generating-function order limited to {MAX_ORDER}", "MAX_ORDER", MAX_ORDER)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_task, tasks))
    else:
        reports = [run_task(t) for t in tasks]
    lines = [r.line("order" if kind == "gf" else "n") for r, (kind, _, _) in zip(reports, tasks)]
    code = 0 if all(r.ok for r in reports) else 1
    return code, "".join(line + "\n" for line in lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altruns", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="csv")

    p = sub.add_parser("triangle", help="emit a number triangle")
    p.add_argument("name", type=str.upper, choices=TRIANGLES)
    p.add_argument("--rows", type=int, required=True)
    add_format(p)

    p = sub.add_parser("poly", help="emit the coefficients of a family member")
    p.add_argument("family", type=str.upper, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("oracle", help="brute-force statistic distribution")
    p.add_argument("statistic", choices=ROW_STATS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    add_format(p)

    p = sub.add_parser("verify", help="run identity and generating-function checks")
    p.add_argument("target", nargs="?", type=str.upper,
                   choices=[t.upper() for t in VERIFY_TARGETS])
    p.add_argument("--gf", action="store_true", help="check the generating functions")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--order", type=int, default=MAX_ORDER, help="series truncation order")
    p.add_argument("--jobs", type=int, default=1)
    return parser


_COMMANDS = {
    "triangle": _cmd_triangle,
    "poly": _cmd_poly,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run_cli(argv: Sequence[str], stderr: TextIO | None = None) -> tuple[int, bytes]:
    """Run one invocation; returns the exit code and everything meant for stdout."""
    err = stderr if stderr is not None else sys.stderr
    help_text = io.StringIO()
    try:
        with contextlib.redirect_stdout(help_text):
            args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2, b""
    except SystemExit as exc:
        return int(exc.code or 0), help_text.getvalue().encode("ascii", "replace")
    if args.command is None:
        err.write("altruns: error: a subcommand is required\n")
        return 2, b""
    if args.command == "verify" and args.target is not None:
        args.target = {t.upper(): t for t in VERIFY_TARGETS}[args.target]
    try:
        code, text = _COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"altruns: error: {exc}\n")
        return 2, b""
    except BoundExceeded as exc:
        err.write(f"altruns: error: {exc} (bound {exc.bound}={exc.limit})\n")
        return 2, b""
    except UnsupportedIndex as exc:
        err.write(f"altruns: error: {exc}\n")
        return 2, b""
    return code, text.encode("ascii")


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run_cli(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
