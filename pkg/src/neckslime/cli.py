"""Batch command-line surface over the whole library.

Everything is print-and-exit: no interactivity, byte-deterministic output
given the arguments (certificates carry wall-time in a metadata field, data
payloads never do).  Output defaults to JSON; ``--format text`` switches to
terse human-readable lines, and bijection tables additionally offer CSV.

Exit codes: 0 success / verified; 1 verification failure or a mathematical
precondition violated (composite length where a prime is needed, migrating
an invalid code, ...); 2 malformed usage or unparseable literals.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .bijection import (
    load_riwi_map,
    prime_bijection,
    riwi_rotation,
    riwi_slime,
    sigma_with_constant,
    verify_riwi,
)
from .certify import CHECKS, run_cell, summarize
from .codes import Code, enumerate_codes, is_prime
from .necklaces import canonicalize, code_to_word, count_necklaces, enumerate_necklaces, word_to_code
from .slime import decompose, migrate_backward, migrate_forward, unit_migration, unit_migration_inverse


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError("must be at least 1")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError("must be nonnegative")
    return value


def _print_code(code: Code, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(code.to_json_dict()))
    else:
        print(code)


def _cmd_slimes(args: argparse.Namespace) -> int:
    dec = decompose(args.code)
    if args.format == "json":
        print(json.dumps(dec.to_json_dict()))
    elif dec.valid:
        runs = " ".join(f"{s.start}:{s.length}" for s in dec.slimes)
        print(f"m={dec.m} weight={dec.weight} slimes={runs}")
    else:
        print(f"m={dec.m} invalid")
    return 0


def _cmd_migrate(args: argparse.Namespace) -> int:
    step = migrate_backward if args.backward else migrate_forward
    code = args.code
    for _ in range(args.steps):
        code = step(code)
    _print_code(code, args.format)
    return 0


def _cmd_phi(args: argparse.Namespace) -> int:
    move = unit_migration_inverse if args.inverse else unit_migration
    _print_code(move(args.code), args.format)
    return 0


def _cmd_ws(args: argparse.Namespace) -> int:
    t = args.code.weighted_sum()
    print(json.dumps({"ws": t}) if args.format == "json" else t)
    return 0


def _cmd_rotate(args: argparse.Namespace) -> int:
    _print_code(args.code.rotate(args.steps), args.format)
    return 0


def _cmd_period(args: argparse.Namespace) -> int:
    d = args.code.period()
    print(json.dumps({"period": d}) if args.format == "json" else d)
    return 0


def _cmd_canon(args: argparse.Namespace) -> int:
    neck = canonicalize(args.code)
    if args.format == "json":
        print(json.dumps(neck.to_json_dict()))
    else:
        print(",".join(str(v) for v in neck.canonical))
    return 0


def _cmd_word(args: argparse.Namespace) -> int:
    w = code_to_word(args.code)
    print(json.dumps({"word": w}) if args.format == "json" else w)
    return 0


def _cmd_unword(args: argparse.Namespace) -> int:
    _print_code(word_to_code(args.word), args.format)
    return 0


def _cmd_enum_codes(args: argparse.Namespace) -> int:
    for code in enumerate_codes(args.n, args.k, t=args.t, full_period_only=args.full_period):
        _print_code(code, args.format)
    return 0


def _cmd_enum_necklaces(args: argparse.Namespace) -> int:
    for neck in enumerate_necklaces(args.n, args.k, full_period_only=args.full_period):
        if args.format == "json":
            print(json.dumps(neck.to_json_dict()))
        else:
            print(",".join(str(v) for v in neck.canonical), neck.word)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    formula = count_necklaces(args.n, args.k)
    enumerated = len(enumerate_necklaces(args.n, args.k))
    match = formula == enumerated
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "formula": formula,
                          "enumerated": enumerated, "match": match}))
    else:
        print(f"formula={formula} enumerated={enumerated}")
    return 0 if match else 1


def _cmd_bijection(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    if args.map is not None:
        table = sigma_with_constant(n, k, load_riwi_map(args.map), args.chooser)
    elif args.riwi == "slime":
        table = sigma_with_constant(n, k, riwi_slime(n, k), args.chooser)
    elif args.riwi == "rotation":
        table = sigma_with_constant(n, k, riwi_rotation(n, k), args.chooser)
    elif not is_prime(n):
        raise ValueError(
            f"no built-in construction for composite length {n}; "
            "supply a riwi map with --map FILE"
        )
    else:
        table = prime_bijection(n, k, args.chooser)
    if args.format == "json":
        print(json.dumps(table.to_json_dict()))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(table.to_csv_rows())
    else:
        for code, neck in table.pairs:
            print(f"{code} -> {','.join(str(v) for v in neck.canonical)} {neck.word}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    certs = run_cell(args.n, args.k, args.check)
    if args.format == "json":
        for cert in certs:
            print(cert.to_json_line())
    else:
        print(summarize(certs))
    return 0 if all(c.passed for c in certs) else 1


def _cmd_verify_riwi(args: argparse.Namespace) -> int:
    report = verify_riwi(load_riwi_map(args.map), args.n, args.k)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        verdict = "pass" if report.passed else "fail"
        print(f"{verdict} checked={report.checked} failures={report.failure_count}")
        for detail in report.failures:
            print(f"  {detail}")
    return 0 if report.passed else 1


def _add_format(parser: argparse.ArgumentParser, choices: tuple[str, ...] = ("json", "text")) -> None:
    parser.add_argument("--format", choices=choices, default="json", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neckslime",
        description="Cyclic integer codes, slime migration, and necklace bijections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slimes", help="decompose a code into slimes")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_slimes)

    p = sub.add_parser("migrate", help="apply forward or backward migrations")
    p.add_argument("--backward", action="store_true")
    p.add_argument("--steps", type=_nonneg, default=1)
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_migrate)

    p = sub.add_parser("phi", help="unit migration: shift the weighted sum by +1")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("ws", help="weighted-sum residue of a code")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_ws)

    p = sub.add_parser("rotate", help="rotate a code left by a step count")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_rotate)

    p = sub.add_parser("period", help="smallest repetition period of a code")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("canon", help="canonical necklace of a code")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("word", help="bead word of a code")
    p.add_argument("code", type=Code.parse)
    _add_format(p)
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("unword", help="gap code of a bead word")
    p.add_argument("word")
    _add_format(p)
    p.set_defaults(func=_cmd_unword)

    p = sub.add_parser("enum", help="enumerate codes or necklaces")
    enum_sub = p.add_subparsers(dest="what", required=True)

    q = enum_sub.add_parser("codes", help="codes of given length and content")
    q.add_argument("n", type=_positive)
    q.add_argument("k", type=_nonneg)
    q.add_argument("--t", type=int, default=None, help="restrict to one weighted-sum residue")
    q.add_argument("--full-period", action="store_true")
    _add_format(q)
    q.set_defaults(func=_cmd_enum_codes)

    q = enum_sub.add_parser("necklaces", help="necklaces of given bead counts")
    q.add_argument("n", type=_positive)
    q.add_argument("k", type=_nonneg)
    q.add_argument("--full-period", action="store_true")
    _add_format(q)
    q.set_defaults(func=_cmd_enum_necklaces)

    p = sub.add_parser("count", help="necklace count: closed formula vs enumeration")
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_nonneg)
    _add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bijection", help="emit a code-to-necklace table")
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_nonneg)
    p.add_argument("--riwi", choices=("slime", "rotation"), default=None)
    p.add_argument("--map", default=None, metavar="FILE", help="custom riwi map (JSON pairs)")
    p.add_argument("--chooser", choices=("lexmin", "lexmax"), default="lexmin")
    _add_format(p, ("json", "csv", "text"))
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("verify", help="run certification checks at one (n, k) cell")
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_nonneg)
    p.add_argument("--check", choices=("all", *CHECKS), default="all")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-riwi", help="test a user-supplied map for the riwi properties")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_nonneg)
    _add_format(p)
    p.set_defaults(func=_cmd_verify_riwi)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
