"""``tonal`` command line: convert, table, orbit, verify.

Exit status: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .action import Translation, orbit, orbit_restrict, shift_amount
from .calendar import SIGNS, ParseError, display_name, iota, parse_daynumber, parse_name
from .tables import FORMATS, TABLES, render_convert, render_table
from .verify import run_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_in(lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"{value} is outside {lo}..{hi}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tonal", description="Exact arithmetic on the 260-day ritual calendar.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert a day number (1..260) or a day name such as 4-Deer")
    p.add_argument("value")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="print a calendar table")
    p.add_argument("name", metavar="name", help=f"one of: {', '.join(TABLES)}")
    p.add_argument("--format", default="text", help=f"one of: {', '.join(FORMATS)}")
    p.add_argument("--mirror", action="store_true", help="layout text only: facsimile orientation")

    p = sub.add_parser("orbit", help="orbit of a day name under a translation (a, b)")
    p.add_argument("--a", type=_int_in(0, 12), required=True)
    p.add_argument("--b", type=_int_in(0, 19), required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--restrict", choices=("none", "numeral", "sign"), default="none")
    p.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("verify", help="run every self-verification suite")
    return parser


def cmd_convert(value: str, fmt: str = "text") -> str:
    if value.strip().isdigit():
        x = parse_daynumber(value)
    else:
        x = iota(parse_name(value))
    return render_convert(x, fmt)


def cmd_table(name: str, fmt: str = "text", mirror: bool = False) -> str:
    if name not in TABLES:
        raise UsageError(f"unknown table {name!r}; valid tables: {', '.join(TABLES)}")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; valid formats: {', '.join(FORMATS)}")
    return render_table(name, fmt, mirror=mirror)


def cmd_orbit(a: int, b: int, seed: str, restrict: str = "none", fmt: str = "text") -> str:
    t = Translation(a, b)
    o = orbit(t, parse_name(seed))
    if restrict == "none":
        elements = [display_name(n) for n in o.elements]
    else:
        elements = orbit_restrict(o, restrict)
    shift = shift_amount(t)
    if fmt == "json":
        return json.dumps(
            {"translation": [a, b], "seed": display_name(o.seed), "restrict": restrict,
             "elements": elements, "length": len(o), "shift": shift},
            indent=2,
        ) + "\n"
    return "\n".join([
        f"orbit of {display_name(o.seed)} under ({a},{b})",
        ",".join(map(str, elements)),
        f"length {len(o)}",
        f"shift {shift} days",
    ]) + "\n"


def cmd_verify(out=None, signs=None, only=None) -> int:
    out = out or sys.stdout
    results = run_all(signs or SIGNS, only)
    for r in results:
        print(r.line(), file=out)
    failed = [r.name for r in results if not r.passed]
    total = sum(r.checks for r in results)
    if failed:
        print(f"FAILED: {len(failed)} of {len(results)} suites ({', '.join(failed)})", file=out)
        return EXIT_VERIFY
    print(f"OK: {len(results)} suites, {total} checks", file=out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "convert":
            sys.stdout.write(cmd_convert(args.value, args.format))
        elif args.command == "table":
            sys.stdout.write(cmd_table(args.name, args.format, args.mirror))
        elif args.command == "orbit":
            sys.stdout.write(cmd_orbit(args.a, args.b, args.seed, args.restrict, args.format))
        elif args.command == "verify":
            return cmd_verify()
    except ParseError as exc:
        print(f"tonal: error: {exc} (offending token: {exc.token!r})", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"tonal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
