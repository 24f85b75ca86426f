"""Cyclic integer codes, the carrier type for everything else in this package.

A code of length ``n`` is a cyclic sequence of ``n`` nonnegative integers;
its content ``k`` is the sum of the entries.  Entries are stored 0-based and
every position computation is modulo ``n``.  The *weighted sum*

    ws(f) = sum_j j * f[j]   (mod n)

splits the codes of fixed ``(n, k)`` into ``n`` residue classes.  One left
rotation lowers the weighted sum by ``k`` mod ``n``; that single fact drives
all the orbit constructions built on top of this module.

Codes hash and compare by their entry tuples, so they can be collected in
sets and sorted lexicographically, and every enumeration here is emitted in
lexicographic order to keep downstream tables reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    if n < 1:
        raise ValueError(f"divisors: need a positive integer, got {n}")
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True, slots=True)
class Code:
    """A cyclic sequence of nonnegative integers.

    Immutable and hashable; all derived quantities are recomputed on demand,
    which is fine at the desk scales this package targets.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("a code needs at least one entry")
        for v in entries:
            if not isinstance(v, int):
                raise TypeError(f"code entries must be integers, got {v!r}")
            if v < 0:
                raise ValueError(f"code entries must be nonnegative, got {v}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        """Length of the code."""
        return len(self.entries)

    @property
    def k(self) -> int:
        """Content of the code: the sum of its entries."""
        return sum(self.entries)

    def rotate(self, steps: int = 1) -> "Code":
        """Shift entries ``steps`` places to the left, cyclically.

        ``rotate(1)`` maps (f0, f1, ..., f_{n-1}) to (f1, ..., f_{n-1}, f0);
        negative steps rotate the other way.
        """
        s = steps % self.n
        if s == 0:
            return self
        return Code(self.entries[s:] + self.entries[:s])

    def weighted_sum(self) -> int:
        """sum_j j * entries[j] modulo n, the residue class of the code."""
        return sum(j * v for j, v in enumerate(self.entries)) % self.n

    def period(self) -> int:
        """Smallest divisor ``d`` of ``n`` such that the code repeats every ``d`` steps."""
        e = self.entries
        for d in divisors(self.n):
            if e == e[d:] + e[:d]:
                return d
        raise AssertionError("unreachable: every code has period n at worst")

    def is_constant(self) -> bool:
        return self.period() == 1

    @classmethod
    def parse(cls, literal: str) -> "Code":
        """Parse a comma-separated literal such as ``"3,0,0"``."""
        try:
            values = tuple(int(part) for part in literal.split(","))
        except ValueError:
            raise ValueError(f"malformed code literal {literal!r}") from None
        return cls(values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    def to_json_dict(self) -> dict:
        return {"entries": list(self.entries), "n": self.n, "k": self.k}


def enumerate_codes(
    n: int,
    k: int,
    t: int | None = None,
    full_period_only: bool = False,
) -> Iterator[Code]:
    """Yield the codes of length ``n`` and content ``k`` in lexicographic order.

    With ``t`` given, only codes whose weighted sum is ``t`` mod ``n`` are
    emitted; with ``full_period_only`` set, only codes of period ``n``.  The
    stream is duplicate-free and sorted, so consumers can freeze its order
    into reproducible artifacts.
    """
    if n < 1:
        raise ValueError(f"enumerate_codes: need n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"enumerate_codes: need k >= 0, got {k}")
    if t is not None:
        t %= n
    for entries in _compositions(n, k):
        code = Code(entries)
        if t is not None and code.weighted_sum() != t:
            continue
        if full_period_only and code.period() != n:
            continue
        yield code


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``k`` as an ordered sum of ``n`` nonnegative parts, lex order."""
    if n == 1:
        yield (k,)
        return
    c = [0] * n
    c[-1] = k
    while True:
        yield tuple(c)
        # lexicographic successor: bump the rightmost position that still has
        # mass strictly to its right, then pack the remainder into the last slot
        suffix = 0
        i = n - 2
        while i >= 0:
            suffix += c[i + 1]
            if suffix > 0:
                break
            i -= 1
        else:
            return
        c[i] += 1
        for j in range(i + 1, n - 1):
            c[j] = 0
        c[-1] = suffix - 1
