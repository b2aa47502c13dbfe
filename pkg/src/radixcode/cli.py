"""Command-line interface: ``radixcode <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
Results go to stdout, diagnostics to stderr.  ``--json`` prints a single
object carrying ``schema_version``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import coding, inversion, rational, verify
from .errors import RadixCodeError, UnknownCheck
from .number_system import (
    decode_integer,
    encode_integer,
    format_digits,
    make_system,
    parse_digits,
)
from .signed_perm import parse_window

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, **payload}))
    else:
        print(text)


def _resolve_systems(args: argparse.Namespace) -> None:
    for attr in ("system", "to_system", "from_system"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(args, attr, make_system(value))


def _cmd_convert(args: argparse.Namespace) -> int:
    source, target = args.from_system, args.to_system or args.system
    if source is None and target is None:
        raise UsageError("convert: give --system/--to and/or --from")
    if source is None:
        try:
            value = int(args.value)
        except ValueError:
            raise UsageError(f"convert: {args.value!r} is not a decimal integer") from None
    else:
        sign, digits, frac = parse_digits(args.value)
        if frac:
            raise UsageError("convert handles integers only; use frac for fractions")
        value = sign * decode_integer(source, digits)
    payload: dict = {"value": str(value)}
    if target is None:
        _emit(args, str(value), payload)
        return EXIT_OK
    digits = encode_integer(target, abs(value))
    sign = -1 if value < 0 else 1
    text = format_digits(sign, digits, compact=args.compact)
    payload.update(system=str(target), sign=sign, digits=list(digits.msf()), text=text)
    _emit(args, text, payload)
    return EXIT_OK


def _expansion_payload(system, e: rational.ExtendedExpansion, text: str) -> dict:
    return {
        "system": str(system),
        "sign": e.sign,
        "integer_digits": list(e.integer_part.msf()),
        "frac_digits": list(e.frac_digits),
        "status": e.status.value,
        "certified": e.certified,
        "text": text,
    }


def _cmd_frac(args: argparse.Namespace) -> int:
    system = args.system
    r = rational.as_rational(args.value)
    e = rational.expand_rational(system, r, args.max_digits)
    if args.exact and not e.terminated:
        print(
            f"frac: {r} does not terminate within {args.max_digits} digits in {system}",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    text = format_digits(e.sign, e.integer_part, e.frac_digits, compact=args.compact)
    if e.terminated:
        note = "(terminating)"
    else:
        note = f"(truncated after {len(e.frac_digits)} digits)"
    payload = _expansion_payload(system, e, text)
    payload["value"] = str(r)
    term = rational.is_terminating(system, r)
    payload["terminating"] = term.terminating
    payload["witness_place"] = term.place
    _emit(args, f"{text} {note}", payload)
    return EXIT_OK


def _cmd_real(args: argparse.Namespace) -> int:
    system = args.system
    e = rational.expand_decimal(
        system, args.value, args.max_digits, tolerance=args.tolerance, strict=not args.lenient
    )
    text = format_digits(e.sign, e.integer_part, e.frac_digits, compact=args.compact)
    note = "(terminating)" if e.terminated else f"(certified {e.certified} digits)"
    _emit(args, f"{text} {note}", _expansion_payload(system, e, text))
    return EXIT_OK


def _cmd_rank(args: argparse.Namespace) -> int:
    if args.family == "hyp":
        pi = parse_window(args.window)
        r = coding.rank_hyperoctahedral(pi)
    else:
        values = [int(x) for x in args.window.strip("[]").split(",")]
        r = coding.rank_symmetric(values)
    _emit(args, str(r.value), {"family": args.family, "n": r.n, "rank": str(r.value)})
    return EXIT_OK


def _cmd_unrank(args: argparse.Namespace) -> int:
    try:
        value = int(args.rank)
    except ValueError:
        raise UsageError(f"unrank: {args.rank!r} is not an integer") from None
    if args.family == "hyp":
        window = list(coding.unrank_hyperoctahedral(value, args.n).images)
    else:
        window = coding.unrank_symmetric(value, args.n)
    text = ",".join(map(str, window))
    _emit(args, text, {"family": args.family, "n": args.n, "rank": str(value), "window": window})
    return EXIT_OK


def _cmd_inv(args: argparse.Namespace) -> int:
    pi = parse_window(args.window)
    vector = inversion.inversion_vector(pi)
    total = sum(vector)
    text = f"inv: {total}\nvector: {','.join(map(str, vector))}"
    _emit(args, text, {"window": list(pi.images), "inv": total, "vector": vector})
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    rows = verify.reproduce_table1(args.lo, args.hi)
    lines = []
    for row in rows:
        line = f"{row.integer:>6}  {row.factorial:>10}  {row.hyperoctahedral:>10}"
        if args.compare and row.printed_factorial is not None:
            flags = []
            if row.factorial_erratum:
                flags.append(f"factorial printed {row.printed_factorial}")
            if row.hyperoctahedral_erratum:
                flags.append(f"hyperoctahedral printed {row.printed_hyperoctahedral}")
            line += "  " + ("ERRATUM: " + "; ".join(flags) if flags else "matches printed table")
        lines.append(line)
    payload = {
        "rows": [
            {
                "integer": row.integer,
                "factorial": row.factorial,
                "hyperoctahedral": row.hyperoctahedral,
                "printed_factorial": row.printed_factorial,
                "printed_hyperoctahedral": row.printed_hyperoctahedral,
                "matches_printed": row.matches_printed,
                "matches_arithmetic": verify.matches_arithmetic(row),
            }
            for row in rows
        ]
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = verify.run_suite(args.suite, args.n)
    ok = all(r.passed for r in reports)
    text = "\n".join(str(r) for r in reports)
    _emit(args, text, {"passed": ok, "reports": [r.as_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="radixcode",
        description="Mixed-radix number systems and ranking of signed permutations.",
    )
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sys_help = "fixed:<m>, factorial, hyperoctahedral or alpha:<a0>,<a1>,..."

    p = sub.add_parser("convert", parents=[common], help="convert an integer between systems")
    p.add_argument("value", help="decimal integer, or a digit string when --from is given")
    p.add_argument("--system", help="target system (" + sys_help + ")")
    p.add_argument("--to", dest="to_system", help="alias of --system")
    p.add_argument("--from", dest="from_system", help="system of the input digits")
    p.add_argument("--compact", action="store_true", help="omit colons when all digits are <= 9")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("frac", parents=[common], help="expand a rational p/q")
    p.add_argument("value", help="rational as p/q")
    p.add_argument("--system", required=True, help=sys_help)
    p.add_argument("--max-digits", type=int, default=32)
    p.add_argument("--exact", action="store_true", help="fail unless the expansion terminates")
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=_cmd_frac)

    p = sub.add_parser("real", parents=[common], help="expand a decimal literal")
    p.add_argument("value", help="decimal literal, e.g. 2.718281828459045")
    p.add_argument("--system", required=True, help=sys_help)
    p.add_argument("--max-digits", type=int, default=8)
    p.add_argument(
        "--tolerance",
        help="absolute error of the literal (default: half a unit in its last place)",
    )
    p.add_argument(
        "--lenient", action="store_true", help="cut to the certified digits instead of failing"
    )
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=_cmd_real)

    p = sub.add_parser("rank", parents=[common], help="rank a permutation")
    p.add_argument("window", help="window notation, e.g. -2,-1 (put '--' before negatives)")
    p.add_argument("--family", choices=("sym", "hyp"), default="hyp")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", parents=[common], help="permutation of a given rank")
    p.add_argument("rank")
    p.add_argument("--n", type=int, required=True, help="group size")
    p.add_argument("--family", choices=("sym", "hyp"), default="hyp")
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("inv", parents=[common], help="inversion number and i-inversions")
    p.add_argument("window")
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("table", parents=[common], help="factorial/hyperoctahedral table")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=79)
    p.add_argument("--compare", action="store_true", help="diff against the printed rows")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive checks")
    p.add_argument("--suite", help="check name(s), e.g. 'theorem8' or 'lemma4 n=3,table2'")
    p.add_argument("--n", type=int, help="override the size of every selected check")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _resolve_systems(args)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except UnknownCheck as exc:
        print(f"radixcode: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RadixCodeError, ValueError, ZeroDivisionError) as exc:
        print(f"radixcode: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
