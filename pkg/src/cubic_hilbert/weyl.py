"""Weyl-group reduction of divisor classes to the standard chamber.

The lattice automorphism group fixing the canonical class is generated
by permutations of the bi together with the cremona involution

    (a; b1..b6) -> (2a-b1-b2-b3; a-b2-b3, a-b1-b3, a-b1-b2, b4, b5, b6)

which is the reflection in the root l-e1-e2-e3.  A class is *standard*
when b1 >= b2 >= ... >= b6 and a >= b1+b2+b3.  `standardize` reduces any
class to a standard one and records the word of generators used, so the
reduction can be replayed or inverted (every generator is an involution,
hence the inverse word is the reversed word).

Each cremona step strictly decreases a, and the group is finite, so the
loop terminates; a generous iteration budget guards against bugs.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import DomainError, InternalError
from .picard import DivisorClass


class Reflection(NamedTuple):
    """One generator: kind is "swap" (exchanging bi, bj) or "cremona"."""

    kind: str
    i: int = 0
    j: int = 0

    def __str__(self) -> str:
        return "cremona" if self.kind == "cremona" else f"swap({self.i},{self.j})"


CREMONA = Reflection("cremona")


def swap(i: int, j: int) -> Reflection:
    """Transposition of the b-slots i and j, 1-based, i < j."""
    if not (1 <= i < j <= 6):
        raise DomainError(f"swap indices must satisfy 1 <= i < j <= 6, got ({i},{j})")
    return Reflection("swap", i, j)


def apply_reflection(d: DivisorClass, r: Reflection) -> DivisorClass:
    if r.kind == "swap":
        b = list(d.b)
        b[r.i - 1], b[r.j - 1] = b[r.j - 1], b[r.i - 1]
        return DivisorClass(d.a, tuple(b))
    if r.kind == "cremona":
        a = d.a
        b1, b2, b3, b4, b5, b6 = d.b
        return DivisorClass(2 * a - b1 - b2 - b3,
                            (a - b2 - b3, a - b1 - b3, a - b1 - b2, b4, b5, b6))
    raise DomainError(f"unknown reflection kind {r.kind!r}")


def apply_word(d: DivisorClass, word: Iterable[Reflection]) -> DivisorClass:
    for r in word:
        d = apply_reflection(d, r)
    return d


def inverse_word(word: Iterable[Reflection]) -> tuple:
    """Inverse of a word: generators are involutions, so just reverse it."""
    return tuple(reversed(tuple(word)))


class StandardForm(NamedTuple):
    standard: DivisorClass
    word: tuple  # of Reflection, applied left to right to the input


def is_standard(d: DivisorClass) -> bool:
    b = d.b
    return all(b[k] >= b[k + 1] for k in range(5)) and d.a >= b[0] + b[1] + b[2]


def _budget(a: int, b: tuple) -> int:
    # defensive cap; the reduction provably needs far fewer steps
    return 10 * (abs(a) + sum(abs(x) for x in b) + 7)


def _reduce(a: int, b: tuple) -> tuple:
    """Fast wordless reduction of raw coordinates to the standard chamber.

    Returns (a, b) with b sorted descending and a >= b1+b2+b3.  This is
    the hot path shared by the cohomology and classifier modules.
    """
    cap = _budget(a, b)
    steps = 0
    while True:
        b = tuple(sorted(b, reverse=True))
        s = b[0] + b[1] + b[2]
        if a >= s:
            return a, b
        steps += 1
        if steps > cap:
            raise InternalError(f"reduction exceeded {cap} steps on ({a}; {b})")
        a, b = 2 * a - s, (a - b[1] - b[2], a - b[0] - b[2], a - b[0] - b[1],
                           b[3], b[4], b[5])


def _sort_recording(d: DivisorClass, word: list) -> DivisorClass:
    # stable bubble sort, descending; equal entries are never swapped
    b = list(d.b)
    for top in range(5, 0, -1):
        for k in range(top):
            if b[k] < b[k + 1]:
                b[k], b[k + 1] = b[k + 1], b[k]
                word.append(swap(k + 1, k + 2))
    return DivisorClass(d.a, tuple(b))


def standardize(d: DivisorClass) -> StandardForm:
    """Reduce to the standard chamber, recording the generator word.

    Postconditions: the result is standard, apply_word(d, word) equals
    it, and the intersection pairing with any class (in particular
    degree and self-intersection) is preserved.
    """
    word: list = []
    cur = d
    cap = _budget(d.a, d.b)
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            raise InternalError(f"standardize exceeded {cap} steps on {d}")
        cur = _sort_recording(cur, word)
        if cur.a >= cur.b[0] + cur.b[1] + cur.b[2]:
            return StandardForm(cur, tuple(word))
        word.append(CREMONA)
        cur = apply_reflection(cur, CREMONA)
