"""Command-line front end.

Exit codes: 0 success, 1 a law or oracle check failed, 2 usage or parse
error, 3 a feedback sum diverged.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import expr as ex
from .dyadic import DyadicPInj
from .errors import DepthExceeded, GoiError, ParseError, TraceDivergence
from .intgoi import RookSquare, square_from_endo
from .oracle import DEFAULT_STEP_BOUND, DEFAULT_WINDOW, disagreements, truncate
from .paths import default_max_iter
from .structures import SUITES, bicyclic_nf, law_suite

EXIT_OK, EXIT_LAW, EXIT_USAGE, EXIT_DIVERGED = 0, 1, 2, 3


def _pieces_text(f: DyadicPInj) -> str:
    return "[" + ", ".join(f"({p.d},{p.r},{p.e},{p.s})" for p in f.pieces) + "]"


def _evaluate(text: str, max_iter: Optional[int]) -> DyadicPInj:
    return ex.evaluate(ex.parse(text), max_iter)


def cmd_eval(args, out) -> int:
    f = _evaluate(args.expr, args.max_iter)
    if args.json:
        print(json.dumps(f.to_json()), file=out)
    else:
        print(_pieces_text(f), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    f = _evaluate(args.expr, args.max_iter)
    for n in range(args.n):
        v = f(n)
        print(f"{n} ↦ {'undefined' if v is None else v}", file=out)
    return EXIT_OK


def cmd_nf(args, out) -> int:
    e = ex.parse(args.expr)
    f = ex.evaluate(e, args.max_iter)
    print(f"canonical: {_pieces_text(f)}", file=out)
    letters = ex.bicyclic_letters(e)
    if letters is not None:
        d, c = bicyclic_nf(letters)
        print(f"bicyclic NF: ({d}, {c})", file=out)
    return EXIT_OK


def cmd_laws(args, out) -> int:
    report = law_suite(args.suite, seed=args.seed, max_iter=args.max_iter, window=args.window)
    if args.json:
        print(report.dumps(), file=out)
    else:
        for law in report.laws:
            line = f"{law.status:8s} {law.name}"
            if law.status != "holds" and law.witness is not None:
                line += f"  witness={json.dumps(law.witness, ensure_ascii=False)}"
            print(line, file=out)
        print(report.summary(), file=out)
    if report.failures:
        return EXIT_LAW
    if report.diverged:
        return EXIT_DIVERGED
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    e = ex.parse(args.expr)
    symbolic = truncate(ex.evaluate(e, args.max_iter), args.n)
    simulated = ex.window_evaluate(e, args.n, args.step_bound)
    bad = disagreements(symbolic, simulated)
    both = sum(1 for a, b in zip(symbolic.codes, simulated.codes) if a >= 0 and b >= 0)
    print(f"window {args.n}: {both} points defined on both sides, {len(bad)} disagreements", file=out)
    for n in bad[:10]:
        print(f"  {n}: symbolic {symbolic[n]} vs oracle {simulated[n]}", file=out)
    return EXIT_LAW if bad else EXIT_OK


def cmd_export(args, out) -> int:
    f = _evaluate(args.expr, args.max_iter)
    payload = square_from_endo(f).to_json() if args.square else f.to_json()
    text = json.dumps(payload, indent=2 if args.pretty else None)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return EXIT_OK


def cmd_import(args, out) -> int:
    if args.file == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    if isinstance(data, dict) and "pieces" in data:
        f = DyadicPInj.from_json(data)
        print(f"DyadicPInj {_pieces_text(f)}", file=out)
    elif isinstance(data, dict) and "src" in data:
        sq = RookSquare.from_json(data)
        print(f"RookSquare {data['src']} → {data['tgt']}", file=out)
        for k in "abcd":
            print(f"  {k}: {_pieces_text(getattr(sq, k))}", file=out)
    else:
        raise ValueError("expected a DyadicPInj or RookSquare JSON object")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="goialg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_iter(p):
        p.add_argument("--max-iter", type=int, default=None,
                       help="feedback iteration bound (default: $GOI_MAX_ITER or 256)")
        return p

    p = with_iter(sub.add_parser("eval", help="print the canonical pieces of an expression"))
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = with_iter(sub.add_parser("table", help="print n ↦ value for n < N"))
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=16)
    p.set_defaults(func=cmd_table)

    p = with_iter(sub.add_parser("nf", help="canonical form, plus the bicyclic NF of Δ/∇ words"))
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = with_iter(sub.add_parser("laws", help="run a law suite"))
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)

    p = with_iter(sub.add_parser("oracle", help="cross-check an expression against the window oracle"))
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--step-bound", type=int, default=DEFAULT_STEP_BOUND)
    p.set_defaults(func=cmd_oracle)

    p = with_iter(sub.add_parser("export", help="write an expression's value as JSON"))
    p.add_argument("expr")
    p.add_argument("--square", action="store_true", help="export the endomorphism rook square")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("import", help="read DyadicPInj or RookSquare JSON and print it")
    p.add_argument("file", help="path, or - for stdin")
    p.set_defaults(func=cmd_import)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if getattr(args, "max_iter", None) is None and hasattr(args, "max_iter"):
            args.max_iter = default_max_iter()
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TraceDivergence, DepthExceeded) as exc:
        where = getattr(exc, "subexpression", None)
        print(f"diverged: {exc}" + (f" in {where}" if where else ""), file=sys.stderr)
        return EXIT_DIVERGED
    except (GoiError, ValueError, KeyError, OSError) as exc:
        where = getattr(exc, "subexpression", None)
        print(f"error: {exc}" + (f" in {where}" if where else ""), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
