"""Command-line surface.

Verbs: minimize, verify, eval, kmap, gen, exact, report, serve.  Exit codes:
0 success, 1 verification or equivalence failure, 2 usage or parse errors.
Failures print a single machine-parsable line `error: <kind>: <detail>` on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .benchmarks import DEFAULT_OUT_INDEX, benchmark_mode_names, gen_benchmark
from .kmap import render_kmap
from .minimizer import (
    MinimizeConfig,
    UncoverableDemandError,
    exact_search,
    minimize,
)
from .polyfunc import (
    Assignment,
    ArityError,
    ExprSyntaxError,
    PolyFunction,
    equivalent,
    eval_expr,
    expr_arity,
    parse_expr,
    print_expr,
    table_of,
)
from .ppla import PplaDocument, PplaError, parse_ppla, serialize_ppla


class CliError(Exception):
    def __init__(self, kind: str, detail: str, code: int):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError("io", str(exc), 2) from None


def _load_function(path: str) -> PolyFunction:
    try:
        return parse_ppla(_read_text(path)).to_function()
    except PplaError as exc:
        raise CliError("parse", str(exc), 2) from None


def _parse_expr_arg(text: str):
    # An argument naming an existing file is read as expression text.
    candidate = Path(text)
    if candidate.is_file():
        text = candidate.read_text().strip()
    try:
        return parse_expr(text), text
    except ExprSyntaxError as exc:
        raise CliError("parse", str(exc), 2) from None


def _cmd_minimize(args: argparse.Namespace) -> int:
    f = _load_function(args.input)
    config = MinimizeConfig(
        max_arity=args.max_arity,
        max_candidates=args.max_candidates,
        enable_triples=not args.no_triples,
    )
    try:
        cover = minimize(f, config)
    except UncoverableDemandError as exc:
        raise CliError("uncoverable", str(exc), 1) from None
    except ArityError as exc:
        raise CliError("arity", str(exc), 2) from None
    cost = cover.cost
    if args.format == "json":
        payload = {
            "schema": 1,
            "n": f.n,
            "expr": print_expr(cover.expr),
            "verified": True,
            "cost": {
                "literal_count": cost.literal_count,
                "gate_count": cost.gate_count,
                "poly_gate_count": cost.poly_gate_count,
                "depth": cost.depth,
            },
            "terms": cover.trace(),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(print_expr(cover.expr))
        print(f"cost: {cost}")
        print("trace:")
        for i, entry in enumerate(cover.trace(), start=1):
            cubes = ",".join(entry["cubes"])
            print(f"  term {i}: rule={entry['rule']} shape={entry['shape']} cubes=[{cubes}]")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    f = _load_function(args.input)
    expr, _ = _parse_expr_arg(args.expr)
    if expr_arity(expr) > f.n:
        raise CliError("arity", f"expression uses x{expr_arity(expr)} but table has {f.n} inputs", 2)
    if equivalent(expr, f):
        print("equivalent")
        return 0
    table = table_of(expr, f.n)
    for k in range(1 << f.n):
        got = table.value_at(k)
        want = f.value_at(k)
        for mode in (1, 2):
            if got.bit(mode) != want.bit(mode):
                bits = format(k, f"0{f.n}b")
                print(
                    f"error: mismatch: input={bits} mode={mode} "
                    f"expected={want.bit(mode)} got={got.bit(mode)}",
                    file=sys.stderr,
                )
                return 1
    raise AssertionError("unreachable: tables differ but no cell mismatched")


def _cmd_eval(args: argparse.Namespace) -> int:
    expr, _ = _parse_expr_arg(args.expr)
    try:
        a = Assignment.from_string(args.input)
    except ValueError as exc:
        raise CliError("parse", str(exc), 2) from None
    if expr_arity(expr) > a.n:
        raise CliError("arity", f"expression uses x{expr_arity(expr)} but input has {a.n} bits", 2)
    try:
        if args.mode == "both":
            print(f"{eval_expr(expr, a, 1)}/{eval_expr(expr, a, 2)}")
        else:
            print(eval_expr(expr, a, int(args.mode)))
    except ArityError as exc:
        raise CliError("arity", str(exc), 2) from None
    return 0


def _cmd_kmap(args: argparse.Namespace) -> int:
    f = _load_function(args.input)
    try:
        sys.stdout.write(render_kmap(f))
    except ArityError as exc:
        raise CliError("arity", str(exc), 2) from None
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        f = gen_benchmark(args.spec, default_out_index=args.out_index)
        names = benchmark_mode_names(args.spec)
    except (ValueError, ArityError) as exc:
        raise CliError("parse", str(exc), 2) from None
    text = serialize_ppla(PplaDocument.from_function(f, names))
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    f = _load_function(args.input)
    try:
        expr = exact_search(f, args.budget)
    except ArityError as exc:
        raise CliError("arity", str(exc), 2) from None
    if expr is None:
        print("budget exhausted")
    else:
        print(print_expr(expr))
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    from .report import run_report

    specs = args.benchmarks.split(",") if args.benchmarks else []
    try:
        run_report(
            specs=[s.strip() for s in specs if s.strip()],
            ppla_paths=args.inputs,
            outdir=Path(args.output),
            delimiter="\t" if args.format == "tsv" else ",",
        )
    except (ValueError, ArityError, PplaError) as exc:
        raise CliError("report", str(exc), 2) from None
    except UncoverableDemandError as exc:
        raise CliError("uncoverable", str(exc), 1) from None
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .workbench import serve

    serve(port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymin",
        description="Dual-mode Boolean function toolkit: evaluate, verify, and minimize.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimize", help="minimize a .ppla table into a verified expression")
    p.add_argument("input", nargs="?", default="-", help=".ppla file ('-' for stdin)")
    p.add_argument("--no-triples", action="store_true", help="restrict to 1- and 2-cube terms")
    p.add_argument("--max-candidates", type=int, default=50_000)
    p.add_argument("--max-arity", type=int, default=10)
    p.add_argument("--format", choices=("expr", "json"), default="expr")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("verify", help="check an expression against a .ppla table")
    p.add_argument("input", help=".ppla file ('-' for stdin)")
    p.add_argument("expr", help="expression text or a file containing it")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("eval", help="evaluate an expression at one input")
    p.add_argument("expr")
    p.add_argument("--input", required=True, help="assignment bits, e.g. 1011")
    p.add_argument("--mode", choices=("1", "2", "both"), default="both")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("kmap", help="render the dual-mode Karnaugh map")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_kmap)

    p = sub.add_parser("gen", help="generate a benchmark .ppla (e.g. parity4/majority4)")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None)
    p.add_argument(
        "--out-index",
        type=int,
        default=DEFAULT_OUT_INDEX,
        help="default output index for multiplier/sortingnet sides",
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("exact", help="exhaustive smallest-expression search (arity <= 3)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--budget", type=int, default=15, help="node-count limit")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("report", help="cost comparison table plus K-map and cost figures")
    p.add_argument("inputs", nargs="*", help=".ppla files to include")
    p.add_argument(
        "--benchmarks",
        default="parity4/majority4,multiplier2x3(2)/sortingnet5(2)",
        help="comma-separated benchmark specs ('' for none)",
    )
    p.add_argument("-o", "--output", default="report", help="output directory")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("serve", help="start the interactive workbench API")
    p.add_argument("--port", type=int, default=None, help="defaults to $PORT or 8000")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.kind}: {exc.detail}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
