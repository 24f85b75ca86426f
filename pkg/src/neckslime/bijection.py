"""Explicit bijections between zero-residue codes and necklaces.

The n rotations of a full-period code f land in the n residue classes of the
weighted sum, hitting each one exactly once per stride q = n / gcd(n, k).
The members of one residue class that are rotations of f form its
*neck-class*: the codes c^(iq)(f) for 0 <= i < gcd(n, k).

A *riwi map* is an invertible transformation chi on full-period codes that
commutes with rotation and raises the weighted sum by exactly 1 mod n
(rotation invariant, weighted-sum increasing).  Given one, the *sigma
construction* pairs the i-th stride rotation of a neck-class representative
with the necklace of chi^i applied to that representative:

    c^(iq)(rep)  |->  necklace(chi^i(rep))      for 0 <= i < n/q

Running this over every neck-class of the zero residue class yields a
bijection between the full-period zero-residue codes and the full-period
necklaces.  Two riwi constructions are provided:

  * a rotation power, available whenever gcd(n, k) = 1;
  * the slime unit migration, available for odd prime n.

For prime n the sigma table extends to all of F_{n,k,0}: the only code of
period < n is the constant one (present exactly when n | k), and it pairs
with the constant necklace.  For n = 2 slime machinery is useless (every
length-2 code is invalid), so even k is handled by an explicit parity rule;
odd k falls back to the rotation construction.

Representatives default to the lexicographically smallest orbit member so
emitted tables are reproducible; the chooser is recorded in the table
metadata and changing it must never break bijectivity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Callable, Iterable

from .codes import Code, enumerate_codes, is_prime
from .necklaces import Necklace, canonicalize
from .slime import unit_migration, unit_migration_inverse


@dataclass(frozen=True, slots=True)
class NeckClass:
    """Rotation orbit of a full-period code within one residue class."""

    q: int
    representative: Code
    members: tuple[Code, ...]


def neck_class(f: Code) -> NeckClass:
    """The neck-class of ``f``: its stride-q rotations, anchored at the lex-min member.

    All members share the weighted-sum residue of ``f``; there are gcd(n, k)
    of them.  Requires a full-period code.
    """
    n = f.n
    if f.period() != n:
        raise ValueError(f"neck_class needs a full-period code, {f} has period {f.period()}")
    q = n // gcd(n, f.k)
    size = n // q
    orbit = [f.rotate(i * q) for i in range(size)]
    rep = min(orbit, key=lambda c: c.entries)
    members = tuple(rep.rotate(i * q) for i in range(size))
    return NeckClass(q=q, representative=rep, members=members)


@dataclass(frozen=True, slots=True)
class RiwiMap:
    """An invertible, rotation-invariant, weighted-sum-increasing transform.

    ``descriptor`` names the construction ("rotation", "slime", or
    "custom:<name>") and is stamped into emitted tables.
    """

    descriptor: str
    apply: Callable[[Code], Code]
    invert: Callable[[Code], Code]


def riwi_rotation(n: int, k: int) -> RiwiMap:
    """Rotation power raising the weighted sum by 1; needs gcd(n, k) = 1.

    One left rotation lowers the weighted sum by k, so rotating
    (-k^(-1)) mod n times raises it by exactly 1.  The constructor
    double-checks that shift on a sample code and refuses to hand out a
    broken map.
    """
    if n < 1:
        raise ValueError(f"riwi_rotation: need n >= 1, got {n}")
    g = gcd(n, k)
    if g != 1:
        raise ValueError(f"riwi_rotation needs gcd(n, k) = 1, got gcd({n}, {k}) = {g}")
    j = (-pow(k, -1, n)) % n
    sample = Code((k,) + (0,) * (n - 1))
    if sample.rotate(j).weighted_sum() != (sample.weighted_sum() + 1) % n:
        raise AssertionError(f"rotation power {j} failed its +1 shift self-check for ({n}, {k})")

    def apply(f: Code, _j: int = j) -> Code:
        return f.rotate(_j)

    def invert(f: Code, _j: int = j) -> Code:
        return f.rotate(-_j)

    return RiwiMap(descriptor="rotation", apply=apply, invert=invert)


def riwi_slime(n: int, k: int) -> RiwiMap:
    """The unit-migration map as a riwi map; needs odd prime n.

    Primality keeps every weight invertible mod n (weights never exceed
    n/2), and oddness keeps every non-constant code valid, so the map is
    total on full-period codes.
    """
    if n == 2 or not is_prime(n):
        raise ValueError(f"riwi_slime needs an odd prime length, got n = {n}")
    return RiwiMap(descriptor="slime", apply=unit_migration, invert=unit_migration_inverse)


def riwi_from_pairs(pairs: Iterable[tuple[Code, Code]], name: str = "pairs") -> RiwiMap:
    """Wrap an explicit list of (source, image) pairs as a riwi-map candidate.

    No properties are checked here; feed the result to :func:`verify_riwi`.
    Sources must be distinct; a repeated image surfaces later as a failed
    round trip rather than a load error.
    """
    forward: dict[Code, Code] = {}
    backward: dict[Code, Code] = {}
    for src, dst in pairs:
        if src in forward:
            raise ValueError(f"custom map lists source {src} twice")
        forward[src] = dst
        backward.setdefault(dst, src)

    def apply(f: Code) -> Code:
        try:
            return forward[f]
        except KeyError:
            raise ValueError(f"custom map does not cover {f}") from None

    def invert(f: Code) -> Code:
        try:
            return backward[f]
        except KeyError:
            raise ValueError(f"custom map image does not cover {f}") from None

    return RiwiMap(descriptor=f"custom:{name}", apply=apply, invert=invert)


def load_riwi_map(path: str | Path) -> RiwiMap:
    """Load a custom map from a JSON array of {"from": [...], "to": [...]} objects."""
    path = Path(path)
    data = json.loads(path.read_text())
    if not isinstance(data, list):
        raise ValueError(f"map file {path} must hold a JSON array of from/to objects")
    pairs = []
    for item in data:
        try:
            pairs.append((Code(tuple(item["from"])), Code(tuple(item["to"]))))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"map file {path}: bad entry {item!r}") from exc
    return riwi_from_pairs(pairs, name=path.stem)


@dataclass(frozen=True, slots=True)
class BijectionTable:
    """An emitted code -> necklace table with its construction metadata."""

    n: int
    k: int
    riwi: str
    chooser: str
    pairs: tuple[tuple[Code, Necklace], ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "riwi": self.riwi,
            "chooser": self.chooser,
            "pairs": [
                {"code": list(c.entries), "necklace": list(m.canonical), "word": m.word}
                for c, m in self.pairs
            ],
        }

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["code", "necklace", "word"]]
        for c, m in self.pairs:
            rows.append([str(c), ",".join(str(v) for v in m.canonical), m.word])
        return rows


_CHOOSERS: dict[str, Callable] = {"lexmin": min, "lexmax": max}


def build_sigma(n: int, k: int, chi: RiwiMap, chooser: str = "lexmin") -> BijectionTable:
    """The sigma construction over the full-period zero-residue codes.

    Walks each neck-class once, anchoring at the member picked by
    ``chooser``, and pairs stride rotations of the anchor with necklaces of
    iterated chi images.  Pairs come out sorted by code, so equal inputs
    give byte-equal tables.  Bijectivity is certified downstream, not here.
    """
    if chooser not in _CHOOSERS:
        raise ValueError(f"unknown representative chooser {chooser!r}")
    pick = _CHOOSERS[chooser]
    q = n // gcd(n, k)
    size = n // q
    seen: set[Code] = set()
    pairs: list[tuple[Code, Necklace]] = []
    for f in enumerate_codes(n, k, t=0, full_period_only=True):
        if f in seen:
            continue
        orbit = [f.rotate(i * q) for i in range(size)]
        seen.update(orbit)
        rep = pick(orbit, key=lambda c: c.entries)
        g = rep
        for i in range(size):
            if i:
                g = chi.apply(g)
            pairs.append((rep.rotate(i * q), canonicalize(g)))
    pairs.sort(key=lambda p: p[0].entries)
    return BijectionTable(n=n, k=k, riwi=chi.descriptor, chooser=chooser, pairs=tuple(pairs))


def prime_bijection(n: int, k: int, chooser: str = "lexmin") -> BijectionTable:
    """The total bijection F_{n,k,0} -> necklaces for prime n.

    Odd primes run the sigma construction with the slime riwi map and pair
    the constant code with the constant necklace when n divides k (the only
    non-full-period case a prime length admits).  n = 2 uses the parity rule
    for even k and the rotation construction for odd k.
    """
    if not is_prime(n):
        raise ValueError(f"prime_bijection needs prime n, got {n}")
    if k < 0:
        raise ValueError(f"prime_bijection: need k >= 0, got {k}")
    if n == 2:
        if k % 2 == 0:
            return _n2_parity_table(k, chooser)
        return build_sigma(2, k, riwi_rotation(2, k), chooser)
    table = build_sigma(n, k, riwi_slime(n, k), chooser)
    return _with_constant_pair(table)


def _n2_parity_table(k: int, chooser: str) -> BijectionTable:
    """Length-2 bijection for even k, where no riwi map can exist.

    Every length-2 code is invalid and rotation preserves the residue, so
    the sigma construction has nothing to work with.  Instead each
    zero-residue code (x, y) pairs with the necklace of (x, y) when x >= y
    and of (y-1, x+1) otherwise; the chooser is recorded for metadata
    symmetry but plays no role.
    """
    if chooser not in _CHOOSERS:
        raise ValueError(f"unknown representative chooser {chooser!r}")
    pairs = []
    for f in enumerate_codes(2, k, t=0):
        x, y = f.entries
        target = f if x >= y else Code((y - 1, x + 1))
        pairs.append((f, canonicalize(target)))
    return BijectionTable(n=2, k=k, riwi="custom:n2-parity", chooser=chooser, pairs=tuple(pairs))


def sigma_with_constant(n: int, k: int, chi: RiwiMap, chooser: str = "lexmin") -> BijectionTable:
    """Sigma table plus the constant-code pair when the constant exists.

    This is the shape the CLI emits for an explicitly chosen riwi map; for
    odd prime n with the slime map it coincides with :func:`prime_bijection`.
    """
    return _with_constant_pair(build_sigma(n, k, chi, chooser))


def _with_constant_pair(table: BijectionTable) -> BijectionTable:
    n, k = table.n, table.k
    if n > 1 and k % n == 0:
        const = Code((k // n,) * n)
        pairs = tuple(sorted(
            table.pairs + ((const, canonicalize(const)),),
            key=lambda p: p[0].entries,
        ))
        return BijectionTable(n=n, k=k, riwi=table.riwi, chooser=table.chooser, pairs=pairs)
    return table


@dataclass(frozen=True, slots=True)
class RiwiReport:
    """Outcome of exhaustively testing the riwi properties on one (n, k) cell."""

    n: int
    k: int
    descriptor: str
    checked: int
    passed: bool
    failure_count: int
    failures: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "riwi": self.descriptor,
            "checked": self.checked,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
        }


_FAILURE_CAP = 10


def verify_riwi(chi: RiwiMap, n: int, k: int) -> RiwiReport:
    """Exhaustively check ``chi`` on every full-period (n, k)-code.

    Confirms the apply/invert round trip, image coverage of the full-period
    set, the +1 weighted-sum shift, and commutation with rotation.  Failures
    become report content, never exceptions; detail strings are capped while
    the count stays exact.
    """
    domain = list(enumerate_codes(n, k, full_period_only=True))
    domain_set = set(domain)
    failures: list[str] = []
    failure_count = 0

    def note(msg: str) -> None:
        nonlocal failure_count
        failure_count += 1
        if len(failures) < _FAILURE_CAP:
            failures.append(msg)

    image: dict[Code, Code] = {}
    for f in domain:
        try:
            g = chi.apply(f)
        except ValueError as exc:
            note(f"apply failed on {f}: {exc}")
            continue
        image[f] = g
        if g.weighted_sum() != (f.weighted_sum() + 1) % n:
            note(f"weighted sum not raised by 1: {f} (ws {f.weighted_sum()}) -> {g} (ws {g.weighted_sum()})")
        try:
            back = chi.invert(g)
        except ValueError as exc:
            note(f"invert failed on {g}: {exc}")
            continue
        if back != f:
            note(f"round trip broken: {f} -> {g} -> {back}")
    for f, g in image.items():
        rf = f.rotate(1)
        rg = image.get(rf)
        if rg is not None and rg != g.rotate(1):
            note(f"not rotation invariant at {f}: rotation maps to {rg}, expected {g.rotate(1)}")
    if set(image.values()) != domain_set:
        missing = sorted(domain_set - set(image.values()), key=lambda c: c.entries)[:3]
        extra = sorted(set(image.values()) - domain_set, key=lambda c: c.entries)[:3]
        note(
            "image does not cover the full-period codes: missing "
            f"{[str(c) for c in missing]}, foreign {[str(c) for c in extra]}"
        )
    return RiwiReport(
        n=n,
        k=k,
        descriptor=chi.descriptor,
        checked=len(domain),
        passed=failure_count == 0,
        failure_count=failure_count,
        failures=tuple(failures),
    )
