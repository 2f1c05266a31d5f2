"""Command-line front end.

Exit codes: 0 conjugate or success, 1 not conjugate (or a negative answer
from a ``word`` query), 2 usage, parse, limit or internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .expr import (
    DEFAULT_SIZE_LIMIT,
    ExprSyntaxError,
    SnfSizeError,
    parse,
    to_snf,
)
from .oracle import EnumBounds, cross_validate
from .witness import (
    Empty,
    InternalInvariantError,
    Unique,
    Universal,
    decide,
    enumerate_witnesses,
)
from .words import (
    INNER,
    OUTER,
    SIDES,
    check_word,
    cuts,
    is_conjugate,
    prefix_delay,
    primitive_root,
    suffix_delay,
)

SCHEMA = 1
ENV_LIMIT = "CONJUGACY_MAX_SNF_SIZE"


class CliError(Exception):
    pass


def _show(w: str) -> str:
    return w if w else "ε"


def witness_json(w) -> dict:
    if isinstance(w, Empty):
        return {"kind": "empty"}
    if isinstance(w, Universal):
        return {"kind": "universal"}
    if isinstance(w, Unique):
        return {"kind": "unique", "word": w.word, "inner": w.inner, "outer": w.outer}
    return {"kind": "allOf", "root": [w.root.u, w.root.v]}


def _family_text(root, side: str) -> str:
    if root.u == root.v:
        return f"({root.u})*"
    (x, y), = cuts(*root)
    return f"({x + y})*{x}" if side == INNER else f"({y + x})*{y}"


def witness_text(w) -> str:
    if isinstance(w, Empty):
        return "no common witness"
    if isinstance(w, Universal):
        return "every word (only empty pairs)"
    if isinstance(w, Unique):
        sides = [s for s in SIDES if w.has(s)]
        return f"unique witness {_show(w.word)} ({', '.join(sides)})"
    return (f"all witnesses of ({w.root.u},{w.root.v}): "
            f"inner {_family_text(w.root, INNER)}, outer {_family_text(w.root, OUTER)}")


def report_json(report) -> dict:
    return {
        "schema": SCHEMA,
        "conjugate": report.conjugate,
        "summands": [
            {
                "expression": str(s.monomial),
                "conjugate": s.conjugate,
                "witnesses": witness_json(s.witnesses),
                "counterexample": list(s.counterexample) if s.counterexample else None,
            }
            for s in report.summands
        ],
    }


def _size_limit(args) -> int:
    if getattr(args, "max_snf_size", None) is not None:
        return args.max_snf_size
    env = os.environ.get(ENV_LIMIT)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise CliError(f"{ENV_LIMIT} must be an integer, got {env!r}")
        if value <= 0:
            raise CliError(f"{ENV_LIMIT} must be positive")
        return value
    return DEFAULT_SIZE_LIMIT


def _read_expr(args):
    if args.file is not None:
        if args.expr is not None:
            raise CliError("give either an expression or -f FILE, not both")
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc.strerror}")
    elif args.expr is not None:
        text = args.expr
    else:
        raise CliError("missing expression (inline or -f FILE)")
    return parse(text)


def cmd_check(args, out) -> int:
    e = _read_expr(args)
    report = decide(e, counterexample=args.counterexample, size_limit=_size_limit(args))
    if args.json:
        print(json.dumps(report_json(report)), file=out)
    elif report.conjugate:
        print("conjugate", file=out)
    elif args.counterexample:
        cx = next((s.counterexample for s in report.summands if s.counterexample), None)
        if cx:
            print(f"not conjugate: ({cx.u}, {cx.v})", file=out)
        else:
            print("not conjugate: no counterexample within the search bounds", file=out)
    else:
        print("not conjugate", file=out)
    return 0 if report.conjugate else 1


def cmd_witness(args, out) -> int:
    e = _read_expr(args)
    report = decide(e, size_limit=_size_limit(args))
    enum = args.enumerate
    if args.json:
        data = report_json(report)
        if enum is not None:
            for entry, s in zip(data["summands"], report.summands):
                if not isinstance(s.witnesses, Universal):
                    entry["enumerated"] = {
                        side: enumerate_witnesses(s.witnesses, side, enum) for side in SIDES
                    }
        print(json.dumps(data), file=out)
    else:
        for s in report.summands:
            print(f"{s.monomial}: {witness_text(s.witnesses)}", file=out)
            if enum is not None and not isinstance(s.witnesses, Universal):
                for side in SIDES:
                    words = enumerate_witnesses(s.witnesses, side, enum)
                    print(f"  {side}: {' '.join(map(_show, words)) or '-'}", file=out)
    return 0 if report.conjugate else 1


def cmd_snf(args, out) -> int:
    e = _read_expr(args)
    res = to_snf(e, _size_limit(args))
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "input_size": res.input_size,
            "output_size": res.output_size,
            "summands": [str(m) for m in res.summands],
        }), file=out)
    else:
        print(" + ".join(str(m) for m in res.summands) or "0", file=out)
    return 0


def cmd_oracle(args, out) -> int:
    e = _read_expr(args)
    bounds = EnumBounds(args.unroll, args.max_len, args.max_pairs)
    rep = cross_validate(e, bounds, args.witness_len)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "pairs_checked": rep.pairs_checked,
            "truncated": rep.truncated,
            "verdict": rep.verdict,
            "counterexample": list(rep.counterexample) if rep.counterexample else None,
            "witnesses": rep.witnesses_found,
            "engine_conjugate": rep.engine_conjugate,
            "failures": rep.failures,
            "notes": rep.notes,
        }), file=out)
    else:
        trunc = " (truncated)" if rep.truncated else ""
        print(f"pairs checked: {rep.pairs_checked}{trunc}", file=out)
        if rep.counterexample:
            cx = rep.counterexample
            print(f"counterexample: ({cx.u}, {cx.v})", file=out)
        else:
            print("all enumerated pairs conjugate", file=out)
        for side, words in rep.witnesses_found.items():
            shown = "every word" if words is None else (" ".join(map(_show, words)) or "-")
            print(f"{side} witnesses: {shown}", file=out)
        for note in rep.notes:
            print(f"note: {note}", file=out)
    if rep.failures:
        raise CliError("engine and oracle disagree: " + "; ".join(rep.failures))
    return 0 if rep.counterexample is None else 1


def cmd_word(args, out) -> int:
    words = [check_word(w) for w in args.words]
    op = args.op
    if op == "root":
        if len(words) != 1:
            raise CliError("word root takes one word")
        if not words[0]:
            raise CliError("the empty word has no primitive root")
        root, n = primitive_root(words[0])
        print(f"{root}^{n}", file=out)
        return 0
    if op == "conjugate":
        if len(words) != 2:
            raise CliError("word conjugate takes two words")
        ok = is_conjugate(*words)
        print("conjugate" if ok else "not conjugate", file=out)
        return 0 if ok else 1
    if op == "cuts":
        if len(words) != 2:
            raise CliError("word cuts takes two words")
        found = cuts(*words)
        for x, y in found:
            print(f"({x},{y})", file=out)
        if not found:
            print("no cuts", file=out)
        return 0 if found else 1
    # delay
    if len(words) != 3 or words[0] not in ("prefix", "suffix"):
        raise CliError("usage: word delay prefix|suffix U V")
    fn = prefix_delay if words[0] == "prefix" else suffix_delay
    d = fn(words[1], words[2])
    print("incomparable" if d is None else _show(d), file=out)
    return 0 if d is not None else 1


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conjugacy",
                                description="Decide conjugacy of rational relations over word pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    def expr_args(sp):
        sp.add_argument("expr", nargs="?", help="expression text, e.g. '(ab,ba)*'")
        sp.add_argument("-f", "--file", help="read the expression from a UTF-8 file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-snf-size", type=_positive, default=None,
                        help=f"normal form size limit (default {DEFAULT_SIZE_LIMIT}, env {ENV_LIMIT})")

    sp = sub.add_parser("check", help="decide conjugacy")
    expr_args(sp)
    sp.add_argument("--counterexample", action="store_true",
                    help="search for a non-conjugate pair when the answer is no")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("witness", help="show common witness sets per summand")
    expr_args(sp)
    sp.add_argument("--enumerate", type=_non_negative, metavar="L",
                    help="list witnesses up to length L")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("snf", help="print the sumfree normal form")
    expr_args(sp)
    sp.set_defaults(func=cmd_snf)

    sp = sub.add_parser("oracle", help="cross-check the engine by bounded enumeration")
    expr_args(sp)
    sp.add_argument("--unroll", type=_non_negative, default=4)
    sp.add_argument("--max-len", type=_positive, default=64)
    sp.add_argument("--max-pairs", type=_positive, default=100_000)
    sp.add_argument("--witness-len", type=_positive, default=16)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("word", help="word utilities")
    sp.add_argument("op", choices=["root", "conjugate", "cuts", "delay"])
    sp.add_argument("words", nargs="*", help="operands ('' for the empty word)")
    sp.set_defaults(func=cmd_word)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (CliError, ExprSyntaxError, SnfSizeError, InternalInvariantError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


run = main
