"""Effectivity, fixed/mobile decomposition, and sheaf cohomology of
divisor classes on the smooth cubic surface.

The work happens in the standard chamber.  For a standard class
(b sorted descending, a >= b1+b2+b3):

  * nef  <=>  b6 >= 0, and a nef class is effective with vanishing
    higher cohomology, so h0 = chi;
  * a nef class with square 0 is a multiple of a conic pencil and its
    standard form is exactly (m; m,0,0,0,0,0);
  * otherwise the negative slots cut out a fixed divisor
    F = sum over bi < 0 of (-bi) ei, a disjoint union of multiple
    lines, which is peeled off and the remainder reduced again.

Peeling terminates because each round drops the degree by at least 1.
Classes are declared ineffective when the standard form has a < 0
(pairs negatively with the nef class l), or negative degree, or
degree 0 without being the zero class.

h0 of a multiple line mE is m(m+1)/2 and of m disjoint conics is m;
both have no higher cohomology.  These feed the direct formula

    h1(S, -D) = h0(O_D') + h0(O_F) - 1

for effective nonzero D with fixed part F and mobile part D', which is
only applied when peeling finished in a single round (the line-by-line
description of F is read off one standard basis; multi-round inputs
fall back to the Serre/Riemann-Roch route).  The general h1 always
comes from exact bookkeeping: h0 and h2 = h0(K-D) are computed by
peeling, and h1 = h0 + h2 - chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DomainError, InternalError
from .picard import (CANONICAL, ZERO, DivisorClass, degree, exceptional,
                     euler_characteristic, intersect, self_intersection)
from .weyl import _reduce, apply_word, inverse_word, standardize

_ZERO_COORDS = (0, (0,) * 6)


class MobileKind(NamedTuple):
    """Shape of the mobile part: "zero", "conics" (with count) or "big"."""

    kind: str
    conics: int = 0


class CohomologyTriple(NamedTuple):
    h0: int
    h1: int
    h2: int


class _PeelCoords(NamedTuple):
    effective: bool
    mobile: Optional[tuple]  # (a, b) in standard coordinates, None if ineffective
    mults: tuple  # per-round tuples of peeled line multiplicities


def _chi(a: int, b: tuple) -> int:
    return (a * a - sum(x * x for x in b) + 3 * a - sum(b)) // 2 + 1


def _peel_coords(a: int, b: tuple) -> _PeelCoords:
    """Wordless peeling on raw coordinates; the hot path."""
    mults: list = []
    while True:
        a, b = _reduce(a, b)
        if a < 0:
            return _PeelCoords(False, None, tuple(mults))
        deg = 3 * a - sum(b)
        if deg < 0:
            return _PeelCoords(False, None, tuple(mults))
        if deg == 0:
            if a == 0 and b[0] == 0 and b[5] == 0:  # sorted, so all zero
                return _PeelCoords(True, _ZERO_COORDS, tuple(mults))
            return _PeelCoords(False, None, tuple(mults))
        if b[5] >= 0:
            return _PeelCoords(True, (a, b), tuple(mults))
        mults.append(tuple(-x for x in b if x < 0))
        b = tuple(x if x >= 0 else 0 for x in b)


def _kind_coords(ma: int, mb: tuple) -> MobileKind:
    """Classify a mobile part given in standard coordinates."""
    if ma == 0 and mb[0] == 0 and mb[5] == 0:
        return MobileKind("zero")
    if ma * ma - sum(x * x for x in mb) > 0:
        return MobileKind("big")
    if ma >= 1 and mb[0] == ma and all(x == 0 for x in mb[1:]):
        return MobileKind("conics", ma)
    raise InternalError(f"nef class with square 0 has unexpected shape ({ma}; {mb})")


def _h0_coords(a: int, b: tuple) -> int:
    p = _peel_coords(a, b)
    return _chi(*p.mobile) if p.effective else 0


def _cohomology_coords(a: int, b: tuple) -> CohomologyTriple:
    h0 = _h0_coords(a, b)
    h2 = _h0_coords(-3 - a, tuple(-1 - x for x in b))
    h1 = h0 + h2 - _chi(a, b)
    if h1 < 0:
        raise InternalError(f"negative h1 = {h1} for ({a}; {b})")
    return CohomologyTriple(h0, h1, h2)


def is_nef(d: DivisorClass) -> bool:
    """Nef test: the standard form has b6 >= 0."""
    return _reduce(d.a, d.b)[1][5] >= 0


def is_big_and_nef(d: DivisorClass) -> bool:
    return self_intersection(d) > 0 and is_nef(d)


def h0_multiple_line(m: int) -> int:
    """h0 of the structure sheaf of a multiple line mE: m(m+1)/2."""
    if m < 0:
        raise DomainError(f"multiplicity must be >= 0, got {m}")
    return m * (m + 1) // 2


def h0_multiple_conic(m: int) -> int:
    """h0 of the structure sheaf of m disjoint conics: m."""
    if m < 0:
        raise DomainError(f"multiplicity must be >= 0, got {m}")
    return m


@dataclass(frozen=True)
class SystemAnalysis:
    """Outcome of analysing the complete linear system of a class.

    `fixed_part` is the formal sum of peeled lines with multiplicities,
    every line mapped back to the basis the input was given in, merged
    and sorted for determinism.  When `effective`, the input equals
    mobile + sum of the fixed part.  `peel_iterations` counts peeling
    rounds; the per-round line description is only basis-coherent for
    counts <= 1.
    """

    effective: bool
    fixed_part: tuple  # ((DivisorClass, multiplicity), ...)
    mobile: DivisorClass
    mobile_kind: MobileKind
    h0: int
    h1: int
    h2: int
    peel_iterations: int

    @property
    def fixed_class(self) -> DivisorClass:
        total = ZERO
        for line, m in self.fixed_part:
            total = total + m * line
        return total


def decompose(d: DivisorClass) -> SystemAnalysis:
    """Full fixed/mobile analysis with lines mapped to the input basis."""
    cur = d
    merged: dict = {}
    rounds = 0
    while True:
        sf = standardize(cur)
        std = sf.standard
        if std.a < 0:
            effective = False
            mobile = ZERO
            break
        deg = degree(std)
        if deg < 0:
            effective = False
            mobile = ZERO
            break
        if deg == 0:
            effective = std.is_zero()
            mobile = ZERO
            break
        if std.b[5] >= 0:
            effective = True
            mobile = cur
            break
        inv = inverse_word(sf.word)
        peeled = ZERO
        for slot in range(6):
            m = -std.b[slot]
            if m > 0:
                line = apply_word(exceptional(slot + 1), inv)
                merged[line] = merged.get(line, 0) + m
                peeled = peeled + m * line
        rounds += 1
        cur = cur - peeled

    if effective:
        fixed = tuple(sorted(merged.items(), key=lambda lm: lm[0].coords))
        _check_fixed_lines(d, mobile, fixed)
        ma, mb = _reduce(mobile.a, mobile.b)
        kind = _kind_coords(ma, mb)
        h0 = _chi(ma, mb)
    else:
        fixed = ()
        kind = MobileKind("zero")
        h0 = 0
    h2 = _h0_coords(-3 - d.a, tuple(-1 - x for x in d.b))
    h1 = h0 + h2 - euler_characteristic(d)
    if h1 < 0:
        raise InternalError(f"negative h1 = {h1} for {d}")
    return SystemAnalysis(effective, fixed, mobile, kind, h0, h1, h2, rounds)


def _check_fixed_lines(original: DivisorClass, mobile: DivisorClass,
                       fixed: tuple) -> None:
    total = ZERO
    lines = [line for line, _ in fixed]
    for line in lines:
        if self_intersection(line) != -1 or intersect(line, CANONICAL) != -1:
            raise InternalError(f"peeled class {line} is not a line")
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if intersect(lines[i], lines[j]) != 0:
                raise InternalError(
                    f"peeled lines {lines[i]} and {lines[j]} meet")
    for line, m in fixed:
        total = total + m * line
    if mobile + total != original:
        raise InternalError(f"decomposition of {original} does not add up")


def cohomology(d: DivisorClass) -> CohomologyTriple:
    """(h0, h1, h2) of O_S(D), exact.

    h0 comes from peeling (chi of the mobile part, or 0), h2 by Serre
    duality as h0(K - D), and h1 = h0 + h2 - chi.
    """
    return _cohomology_coords(d.a, d.b)


def h1_of_minus(d: DivisorClass) -> int:
    """h1(S, -D) for an effective nonzero D.

    Single-round peels use h0(O_D') + h0(O_F) - 1 directly; peels that
    needed several rounds fall back to the general route, since the
    line description of the fixed part is only read off one basis.
    """
    p = _peel_coords(d.a, d.b)
    if d.is_zero() or not p.effective:
        raise DomainError(f"h1_of_minus needs an effective nonzero class, got {d}")
    if len(p.mults) <= 1:
        kind = _kind_coords(*p.mobile)
        if kind.kind == "zero":
            mobile_h0 = 0
        elif kind.kind == "big":
            mobile_h0 = 1
        else:
            mobile_h0 = h0_multiple_conic(kind.conics)
        fixed_h0 = sum(h0_multiple_line(m) for m in (p.mults[0] if p.mults else ()))
        return mobile_h0 + fixed_h0 - 1
    return _cohomology_coords(-d.a, tuple(-x for x in d.b)).h1
