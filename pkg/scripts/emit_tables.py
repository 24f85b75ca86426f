#!/usr/bin/env python3
"""Emit code-to-necklace tables for a list of cells.

Cells are given as N:K pairs, e.g. ``emit_tables.py 3:3 5:10``.  One file is
written per cell into --out-dir.
"""

from __future__ import annotations

import argparse
import csv
import json
from pathlib import Path

from neckslime import prime_bijection


def parse_cell(text: str) -> tuple[int, int]:
    n_part, sep, k_part = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected N:K, got {text!r}")
    try:
        return int(n_part), int(k_part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N:K, got {text!r}") from None


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cells", nargs="+", type=parse_cell, metavar="N:K")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--chooser", choices=("lexmin", "lexmax"), default="lexmin")
    ap.add_argument("--out-dir", type=Path, default=Path("tables"))
    args = ap.parse_args(argv)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for n, k in args.cells:
        table = prime_bijection(n, k, chooser=args.chooser)
        dest = args.out_dir / f"bijection_{n}_{k}.{args.format}"
        if args.format == "json":
            dest.write_text(json.dumps(table.to_json_dict(), indent=2) + "\n")
        else:
            with dest.open("w", newline="") as fh:
                csv.writer(fh, lineterminator="\n").writerows(table.to_csv_rows())
        print(f"wrote {dest} ({len(table.pairs)} pairs)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
