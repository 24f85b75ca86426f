#!/usr/bin/env python3
"""Run the certification sweep over a configurable envelope.

Prints the summary table to stdout and optionally writes one JSON line per
certificate.  Exits nonzero when any certificate fails, so this doubles as
a shell-level regression gate.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from neckslime import Envelope, run_sweep, summarize


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--primes", type=int, nargs="*", default=[11],
                    help="extra prime lengths to sweep beyond n-max")
    ap.add_argument("--max-codes", type=int, default=500_000,
                    help="skip any cell whose enumeration would exceed this")
    ap.add_argument("--check", action="append", default=None, metavar="NAME",
                    help="restrict to one check (repeatable)")
    ap.add_argument("--out", type=Path, default=None,
                    help="also write certificates as JSON lines to this file")
    args = ap.parse_args(argv)
    envelope = Envelope(
        n_max=args.n_max,
        k_max=args.k_max,
        prime_extra=tuple(args.primes),
        max_codes=args.max_codes,
    )
    certs = run_sweep(envelope, checks=args.check)
    if args.out is not None:
        args.out.write_text("".join(c.to_json_line() + "\n" for c in certs))
    print(summarize(certs))
    return 0 if all(c.passed for c in certs) else 1


if __name__ == "__main__":
    raise SystemExit(main())
