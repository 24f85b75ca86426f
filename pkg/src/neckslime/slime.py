"""Slime decomposition and migration moves on cyclic codes.

For a code f of length n, look at the n cyclic adjacent-pair sums
f[j] + f[j+1 mod n] and let m be their maximum.  A *slime* is a maximal run
of consecutive positions whose pair sums all equal m; its entries alternate
between two values a, b with a + b = m.  A run covering r pairs occupies
r + 1 positions, so every slime has size at least 2.

A code is *valid* when at least one pair sum falls below m, i.e. the hot
pairs do not wrap all the way around.  For valid codes the slimes are
disjoint and the *weight*

    w(f) = sum over slimes of floor(size / 2)

satisfies 1 <= w(f) <= floor(n / 2).

A *migration* moves every slime one step simultaneously:

  * even slime a,b,...,a,b  -> forward a-1,b+1,...,a-1,b+1 (backward mirrors);
  * odd slime a,b,...,b,a   -> forward keeps the left endpoint and yields
    a,b-1,a+1,...,b-1,a+1; backward keeps the right endpoint and yields
    a-1,b+1,...,a-1,b+1,a... i.e. the reflected move.

Migration shifts the weighted sum by +w(f) (forward) or -w(f) (backward),
preserves m, the number of slimes, the weight and validity, and the two
directions invert each other.  Iterating the forward move

    pow(w(f), -1, n)

times shifts the weighted sum by exactly +1 while commuting with rotation;
that unit move is the engine behind the slime-based orbit bijection.  It
needs gcd(w(f), n) = 1, which always holds when n is prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .codes import Code


class InvalidCodeError(ValueError):
    """Raised when a slime operation is applied to a code with no valid decomposition."""


class NonCoprimeWeightError(ValueError):
    """Raised when the unit move needs w(f) invertible mod n and it is not."""


@dataclass(frozen=True, slots=True)
class Slime:
    """One maximal hot run: ``length`` entries starting at position ``start``."""

    start: int
    length: int

    def positions(self, n: int) -> tuple[int, ...]:
        return tuple((self.start + i) % n for i in range(self.length))


@dataclass(frozen=True, slots=True)
class SlimeDecomposition:
    code: Code
    m: int
    valid: bool
    slimes: tuple[Slime, ...]

    @property
    def weight(self) -> int:
        if not self.valid:
            raise InvalidCodeError(f"code {self.code} has no weight: all pair sums equal")
        return sum(s.length // 2 for s in self.slimes)

    def to_json_dict(self) -> dict:
        out: dict = {"m": self.m, "valid": self.valid}
        if self.valid:
            out["weight"] = self.weight
        out["slimes"] = [{"start": s.start, "len": s.length} for s in self.slimes]
        return out


def max_adjacent_sum(code: Code) -> int:
    e = code.entries
    n = code.n
    return max(e[j] + e[(j + 1) % n] for j in range(n))


def decompose(code: Code) -> SlimeDecomposition:
    """Locate all slimes of ``code``.

    Returned slimes are sorted by start position.  An invalid code (every
    pair sum equal, which is always the case for n <= 2) carries no slimes.
    """
    e = code.entries
    n = code.n
    sums = [e[j] + e[(j + 1) % n] for j in range(n)]
    m = max(sums)
    hot = [s == m for s in sums]
    if all(hot):
        return SlimeDecomposition(code=code, m=m, valid=False, slimes=())
    slimes = []
    for j in range(n):
        if hot[j] and not hot[(j - 1) % n]:
            r = 1
            while hot[(j + r) % n]:
                r += 1
            slimes.append(Slime(start=j, length=r + 1))
    return SlimeDecomposition(code=code, m=m, valid=True, slimes=tuple(slimes))


def is_valid(code: Code) -> bool:
    return decompose(code).valid


def weight(code: Code) -> int:
    return decompose(code).weight


def _migrate(code: Code, forward: bool) -> Code:
    dec = decompose(code)
    if not dec.valid:
        raise InvalidCodeError(f"cannot migrate invalid code {code}")
    n = code.n
    out = list(code.entries)
    for slime in dec.slimes:
        pos = slime.positions(n)
        ln = slime.length
        if ln % 2 == 0:
            # alternating a,b,...,a,b: shift one unit from each a to each b
            for i, p in enumerate(pos):
                out[p] += (-1 if i % 2 == 0 else 1) if forward else (1 if i % 2 == 0 else -1)
        else:
            # endpoints both carry a; forward pins the left one, backward the right
            if forward:
                for i, p in enumerate(pos):
                    if i == 0:
                        continue
                    out[p] += -1 if i % 2 == 1 else 1
            else:
                for i, p in enumerate(pos):
                    if i == ln - 1:
                        continue
                    out[p] += -1 if i % 2 == 1 else 1
    for v in out:
        assert v >= 0, f"migration produced a negative entry from {code}"
    return Code(tuple(out))


def migrate_forward(code: Code) -> Code:
    """One simultaneous forward step of every slime; shifts ws by +w(f) mod n."""
    return _migrate(code, forward=True)


def migrate_backward(code: Code) -> Code:
    """Inverse of :func:`migrate_forward`; shifts ws by -w(f) mod n."""
    return _migrate(code, forward=False)


def unit_migration(code: Code) -> Code:
    """Forward-migrate ``pow(w, -1, n)`` times, shifting the weighted sum by exactly +1.

    Commutes with rotation and preserves everything migration preserves.
    """
    return _unit(code, forward=True)


def unit_migration_inverse(code: Code) -> Code:
    """Inverse of :func:`unit_migration`: shifts the weighted sum by -1."""
    return _unit(code, forward=False)


def _unit(code: Code, forward: bool) -> Code:
    n = code.n
    w = weight(code)  # raises InvalidCodeError on invalid codes
    if gcd(w, n) != 1:
        raise NonCoprimeWeightError(
            f"weight {w} of {code} is not invertible mod {n} (gcd {gcd(w, n)})"
        )
    steps = pow(w, -1, n)
    step = migrate_forward if forward else migrate_backward
    for _ in range(steps):
        code = step(code)
    return code
