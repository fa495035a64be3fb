"""
Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 negative predicate
(``equiv``), 4 verification failure. Set ``BELT_COLOR=never`` to disable ANSI
styling (``auto``, the default, styles only when stdout is a terminal).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from .catalog import ParticleEntry, all_entries, collisions, derive_standard_form
from .core import FramedBraid, perm_elim, writhe
from .expr import ParseError, parse_expression, render_expression
from .reduction import cyclic_equivalent, multiply, pure_twist
from .stack import build_stack, render
from .verify import format_report, run_verify

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_NEGATIVE, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _styler(stream: TextIO):
    mode = os.environ.get("BELT_COLOR", "auto")
    enabled = mode != "never" and hasattr(stream, "isatty") and stream.isatty()

    def style(ok: bool, text: str) -> str:
        if not enabled:
            return text
        return f"\033[{'32' if ok else '31'}m{text}\033[0m"

    return style


def _word_tokens(fb: FramedBraid) -> list[str]:
    return [str(g) for g in fb.word.letters]


def reduce_record(source: str, fb: FramedBraid) -> dict:
    pure = pure_twist(fb)
    return {
        "expr": source,
        "twist_half_units": list(fb.twist.halves),
        "word": _word_tokens(fb),
        "pure_twist_half_units": list(pure.halves),
        "pure_twist_display": pure.display(),
        "permutation_image": list(perm_elim(fb.word).image),
        "writhe": writhe(fb.word),
    }


def _entry_record(e: ParticleEntry) -> dict:
    sf = derive_standard_form(e)
    return {
        "name": e.name,
        "handedness": e.handedness,
        "pure_twist_half_units": list(e.pure.halves),
        "pure_twist_display": e.pure.display(),
        "standard_form": render_expression(sf),
    }


def _parse(text: str, err: TextIO) -> FramedBraid | None:
    try:
        return parse_expression(text)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        if exc.line == 1 and "\n" not in text:
            err.write(f"  {text}\n  {' ' * (exc.column - 1)}^\n")
        return None


def cmd_reduce(args, out, err) -> int:
    fb = _parse(args.expr, err)
    if fb is None:
        return EXIT_PARSE
    rec = reduce_record(args.expr, fb)
    if args.json:
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"expression: {render_expression(fb)}\n")
        out.write(f"pure twist: {rec['pure_twist_display']}\n")
        out.write(f"permutation: {tuple(rec['permutation_image'])}\n")
        out.write(f"writhe: {rec['writhe']}\n")
    return EXIT_OK


def cmd_multiply(args, out, err) -> int:
    f1, f2 = _parse(args.left, err), _parse(args.right, err)
    if f1 is None or f2 is None:
        return EXIT_PARSE
    prod = multiply(f1, f2)
    pure = pure_twist(prod)
    if args.json:
        rec = {
            "expr": render_expression(prod),
            "twist_half_units": list(prod.twist.halves),
            "word": _word_tokens(prod),
            "pure_twist_half_units": list(pure.halves),
            "pure_twist_display": pure.display(),
        }
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"product: {render_expression(prod)}\n")
        out.write(f"pure twist: {pure.display()}\n")
    return EXIT_OK


def cmd_equiv(args, out, err) -> int:
    f1, f2 = _parse(args.left, err), _parse(args.right, err)
    if f1 is None or f2 is None:
        return EXIT_PARSE
    p1, p2 = pure_twist(f1), pure_twist(f2)
    same = cyclic_equivalent(p1, p2) if args.cyclic else p1 == p2
    relation = "cyclically equivalent" if args.cyclic else "isotopic"
    verdict = relation if same else f"not {relation}"
    out.write(f"{_styler(out)(same, verdict)}: {p1.display()} vs {p2.display()}\n")
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_table(args, out, err) -> int:
    if args.collisions:
        pairs = collisions(args.collisions)
        if args.json:
            out.write(json.dumps([{"a": _entry_record(a), "b": _entry_record(b)} for a, b in pairs]) + "\n")
        elif args.tsv:
            out.write("a\ta_handedness\ta_pure\tb\tb_handedness\tb_pure\n")
            for a, b in pairs:
                out.write(f"{a.name}\t{a.handedness}\t{a.pure}\t{b.name}\t{b.handedness}\t{b.pure}\n")
        else:
            out.write(f"{len(pairs)} {args.collisions} collision(s)\n")
            for a, b in pairs:
                out.write(f"  {a.label():<16} {a.pure.display():<12} ~ {b.label():<16} {b.pure.display()}\n")
        return EXIT_OK
    records = [_entry_record(e) for e in all_entries()]
    if args.json:
        out.write(json.dumps(records) + "\n")
    elif args.tsv:
        out.write("name\thandedness\tpure_twist\tstandard_form\n")
        for r in records:
            out.write(f"{r['name']}\t{r['handedness']}\t{r['pure_twist_display']}\t{r['standard_form']}\n")
    else:
        for r in records:
            out.write(f"{r['handedness']:<6} {r['name']:<7} {r['pure_twist_display']:<12} {r['standard_form']}\n")
    return EXIT_OK


def cmd_stack(args, out, err) -> int:
    fb = _parse(args.expr, err)
    if fb is None:
        return EXIT_PARSE
    for line in render(build_stack(fb)):
        out.write(line + "\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.trials < 0 or args.max_len < 0:
        raise UsageError("--trials and --max-len must be non-negative")
    report = run_verify(args.trials, args.seed, args.max_len)
    for line in format_report(report, _styler(out)):
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_batch(args, out, err) -> int:
    try:
        stream = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    failed = False
    with stream:
        for lineno, raw in enumerate(stream, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            try:
                fb = parse_expression(text)
            except ParseError as exc:
                failed = True
                if args.json:
                    out.write(json.dumps({"line": lineno, "expr": text, "error": str(exc)}) + "\n")
                else:
                    out.write(f"line {lineno}: parse error: {exc}\n")
                continue
            rec = reduce_record(text, fb)
            if args.json:
                out.write(json.dumps({"line": lineno, **rec}) + "\n")
            else:
                out.write(f"line {lineno}: {render_expression(fb)} -> {rec['pure_twist_display']}\n")
    return EXIT_PARSE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="belts", description="Pure twist-words of framed three-strand braids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("reduce", help="pure twist-word, permutation and writhe of an expression")
    s.add_argument("expr")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("multiply", help="standard-form product of two expressions")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("equiv", help="compare pure twist-words (exit 3 if different)")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--cyclic", action="store_true", help="identify cyclic rotations")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("table", help="fermion catalog or its collision report")
    s.add_argument("--collisions", choices=("exact", "cyclic"))
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("stack", help="ASCII symbol-stack diagram")
    s.add_argument("expr")
    s.set_defaults(func=cmd_stack)

    s = sub.add_parser("verify", help="randomised property suite and discrepancy report")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-len", type=int, default=32)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("batch", help="reduce one expression per line of FILE ('-' for stdin)")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_batch)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
