"""Binary necklaces with n black and k white beads, stored as gap codes.

A necklace is an equivalence class of bead strings under rotation.  We record
one by the cyclic sequence of white-run lengths after each black bead (its
*gap code*, a code of length n and content k) and canonicalize by taking the
lexicographically smallest rotation.  The bead word is recovered gap by gap:

    word = "B" + "W"*e[0] + "B" + "W"*e[1] + ...

The number of such necklaces is

    (1 / (n+k)) * sum over d | gcd(n, k) of phi(d) * C((n+k)/d, n/d)

which this module evaluates exactly (the division is asserted to be exact).
For odd n that count also equals the number of codes in the zero residue
class, a coincidence the certification checks lean on; for even n the two
counts genuinely differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .codes import Code, divisors, enumerate_codes


def binomial(a: int, b: int) -> int:
    if not 0 <= b <= a:
        raise ValueError(f"binomial({a}, {b}) out of range")
    return comb(a, b)


def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n, by trial-division factoring."""
    if n < 1:
        raise ValueError(f"euler_phi: need n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True, slots=True)
class Necklace:
    """A rotation class of bead strings, keyed by its canonical gap code.

    Construct via :func:`canonicalize`; the constructor trusts its input to
    already be the lex-min rotation.
    """

    canonical: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.canonical)

    @property
    def k(self) -> int:
        return sum(self.canonical)

    @property
    def word(self) -> str:
        return code_to_word(Code(self.canonical))

    def period(self) -> int:
        return Code(self.canonical).period()

    def to_json_dict(self) -> dict:
        return {"canonical": list(self.canonical), "word": self.word}

    def __str__(self) -> str:
        return "<" + ",".join(str(v) for v in self.canonical) + ">"


def canonicalize(code: Code) -> Necklace:
    """The necklace of a gap code: lex-min over all its rotations."""
    e = code.entries
    best = min(e[s:] + e[:s] for s in range(len(e)))
    return Necklace(canonical=best)


def code_to_word(code: Code) -> str:
    return "".join("B" + "W" * v for v in code.entries)


def word_to_code(word: str) -> Code:
    """Gap code of a bead word, read cyclically from its first black bead."""
    if set(word) - {"B", "W"}:
        raise ValueError(f"bead word may only contain 'B' and 'W', got {word!r}")
    if "B" not in word:
        raise ValueError(f"bead word needs at least one black bead, got {word!r}")
    start = word.index("B")
    aligned = word[start:] + word[:start]
    gaps = [len(run) for run in aligned[1:].split("B")]
    return Code(tuple(gaps))


def count_necklaces(n: int, k: int) -> int:
    """Exact necklace count for n black and k white beads."""
    if n < 1 or k < 0:
        raise ValueError(f"count_necklaces: need n >= 1 and k >= 0, got ({n}, {k})")
    total = 0
    for d in divisors(gcd(n, k)):  # gcd(n, 0) == n covers the k == 0 case
        total += euler_phi(d) * binomial((n + k) // d, n // d)
    q, r = divmod(total, n + k)
    assert r == 0, f"necklace count for ({n}, {k}) did not divide evenly"
    return q


def enumerate_necklaces(n: int, k: int, full_period_only: bool = False) -> list[Necklace]:
    """All necklaces with n black and k white beads, sorted by canonical gap code.

    The reference implementation is the canonical-form filter over the full
    code enumeration; any faster generator must agree with it pair for pair.
    """
    out = []
    for code in enumerate_codes(n, k, full_period_only=full_period_only):
        e = code.entries
        if all(e <= e[s:] + e[:s] for s in range(1, n)):
            out.append(Necklace(canonical=e))
    return out
