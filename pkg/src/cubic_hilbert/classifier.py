"""Classification of the Hilbert-scheme families swept out by curves on
smooth cubic surfaces.

A family is keyed by an admissible class (a; b1..b6):

    a > b1 >= b2 >= ... >= b6 >= 0   and   a >= b1 + b2 + b3,

one key per W-orbit of very ample-side representatives.  For degree
d = 3a - sum(bi) > 9 the family of curves of class C inside the flag
Hilbert scheme has dimension d + g + 18, and its closure is compared
against components of the Hilbert scheme of space curves through

    h0(N_C) = 4d + h1(O_C(3)),      h1(O_C(3)) = h0(S, C - 4h),
    h1(I_C(3)) = h1(S, -(C - 3h)),

all evaluated exactly on the lattice.  The region of interest is
Omega = {d > 9, g >= 3d - 18}.  Inside Omega the verdict is decided by
the standard-form tail of the key: h1(I_C(3)) = 0 gives a generically
reduced component, b6 = 2 with b5 >= 3 gives a generically non-reduced
component (the obstruction argument is spelled out in `verify_core`),
b6 = 0 means the family lies in no component of its own, and the rest
stay open, annotated with which published ranges cover them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Iterator, NamedTuple, Optional

from .cohomology import (_cohomology_coords, _h0_coords, decompose,
                         is_big_and_nef)
from .errors import DomainError, InternalError
from .picard import (HYPERPLANE, DivisorClass, degree, exceptional, genus,
                     intersect)

KLEPPE_RANGE_1 = "kleppe_range_1"
KLEPPE_RANGE_2 = "kleppe_range_2"


class Verdict(Enum):
    REDUCED_COMPONENT = "reduced_component"
    NON_REDUCED_COMPONENT = "non_reduced_component"
    NOT_COMPONENT = "not_component"
    BELOW_OMEGA = "below_omega"
    OPEN = "open"


class FamilyKey(NamedTuple):
    """Admissible class labelling one family; construct via `make`."""

    a: int
    b: tuple

    @classmethod
    def make(cls, a: int, b) -> "FamilyKey":
        bt = tuple(int(x) for x in b)
        key = cls(int(a), bt)
        if not key.is_admissible():
            raise DomainError(f"({a}; {bt}) is not an admissible family key")
        return key

    @classmethod
    def from_class(cls, d: DivisorClass) -> "FamilyKey":
        return cls.make(d.a, d.b)

    def is_admissible(self) -> bool:
        a, b = self.a, self.b
        return (len(b) == 6
                and all(b[k] >= b[k + 1] for k in range(5))
                and b[5] >= 0
                and a > b[0]
                and a >= b[0] + b[1] + b[2])

    @property
    def divisor_class(self) -> DivisorClass:
        return DivisorClass(self.a, self.b)

    def __str__(self) -> str:
        return "({}; {})".format(self.a, ",".join(str(x) for x in self.b))


def in_omega(d: int, g: int) -> bool:
    return d > 9 and g >= 3 * d - 18


@dataclass(frozen=True)
class CoreCheck:
    """Lattice-level hypotheses and consequences behind the non-reduced
    verdict for a key C.

    Hypotheses: (i) the fixed part of |C - 3h| is a single line E taken
    with multiplicity one, equivalently b6 = 2 and b5 >= 3 in standard
    form; (ii) |C - 4h| is nonempty.  The remaining booleans are
    consequences that must all hold whenever (i) and (ii) do.  The
    candidate line is the slot-6 exceptional class (keys are already
    standard), so every field is well defined even when (i) fails.
    """

    fixed_part_is_single_line: bool
    d_minus_4h_effective: bool
    ce_is_2: bool
    c3he_nef_big: bool
    delta_effective: bool
    delta_disjoint_e: bool
    injectivity_inequality: bool
    h1_is_1: bool
    line: DivisorClass
    delta: DivisorClass

    @property
    def hypotheses_hold(self) -> bool:
        return self.fixed_part_is_single_line and self.d_minus_4h_effective

    @property
    def consequences_hold(self) -> bool:
        return (self.ce_is_2 and self.c3he_nef_big and self.delta_effective
                and self.delta_disjoint_e and self.injectivity_inequality
                and self.h1_is_1)


@dataclass(frozen=True)
class FamilyReport:
    key: FamilyKey
    d: int
    g: int
    in_omega: bool
    dim_w: int
    chi_n: int
    h1_ideal_3: int
    h1_ideal_1: int
    h1_oc3: int
    h0_normal: int
    verdict: Verdict
    kleppe_ellia_applies: Optional[bool]
    literature_flags: frozenset
    core: Optional[CoreCheck]


def h1_ideal(key: FamilyKey, n: int) -> int:
    """h1 of the degree-n ideal sheaf twist, as h1(S, -(C - n h))."""
    if n < 0:
        raise DomainError(f"twist must be >= 0, got {n}")
    if not key.is_admissible():
        raise DomainError(f"{key} is not admissible")
    ma = 3 * n - key.a
    mb = tuple(n - x for x in key.b)
    return _cohomology_coords(ma, mb).h1


def h1_ideal_3_closed_form(key: FamilyKey) -> int:
    """Tail-weight formula for h1 of the cubic ideal twist inside Omega.

    Counts 1 per bi = 2, 3 per bi = 1, 6 per bi = 0; identically 0 for
    d < 12.  Only valid inside Omega, hence the domain check.
    """
    if not key.is_admissible():
        raise DomainError(f"{key} is not admissible")
    d = degree(key.divisor_class)
    g = genus(key.divisor_class)
    if not in_omega(d, g):
        raise DomainError(f"{key} lies outside Omega (d={d}, g={g})")
    if d < 12:
        return 0
    weights = {2: 1, 1: 3, 0: 6}
    return sum(weights.get(x, 0) for x in key.b)


def verify_core(key: FamilyKey) -> CoreCheck:
    """Evaluate the lattice hypotheses behind the non-reduced verdict."""
    if not key.is_admissible():
        raise DomainError(f"{key} is not admissible")
    c = key.divisor_class
    c3 = c - 3 * HYPERPLANE
    c4 = c - 4 * HYPERPLANE
    line = exceptional(6)

    a3 = decompose(c3)
    single = (a3.effective and len(a3.fixed_part) == 1
              and a3.fixed_part[0][1] == 1)
    if single:
        line = a3.fixed_part[0][0]
    c4_effective = decompose(c4).effective

    delta = c4 - 2 * line
    return CoreCheck(
        fixed_part_is_single_line=single,
        d_minus_4h_effective=c4_effective,
        ce_is_2=intersect(c, line) == 2,
        c3he_nef_big=is_big_and_nef(c3 - line),
        delta_effective=decompose(delta).effective,
        delta_disjoint_e=intersect(delta, line) == 0,
        injectivity_inequality=intersect(3 * HYPERPLANE + 2 * line - c, c) < 0,
        h1_is_1=h1_ideal(key, 3) == 1,
        line=line,
        delta=delta,
    )


def _literature_flags(d: int, g: int) -> frozenset:
    flags = set()
    if d >= 18 and 8 * g > 56 + (d - 2) ** 2:
        flags.add(KLEPPE_RANGE_1)
    if 14 <= d <= 17 and 8 * g > d * d - 12:
        flags.add(KLEPPE_RANGE_2)
    return frozenset(flags)


def classify(key: FamilyKey) -> FamilyReport:
    """Full report for one family key; requires d > 9."""
    if not key.is_admissible():
        raise DomainError(f"{key} is not admissible")
    c = key.divisor_class
    d = degree(c)
    g = genus(c)
    if d <= 9:
        raise DomainError(f"classification needs degree > 9, got d={d} for {key}")

    omega = in_omega(d, g)
    h1_3 = h1_ideal(key, 3)
    h1_1 = h1_ideal(key, 1)
    h1_oc3 = _h0_coords(c.a - 12, tuple(x - 4 for x in c.b))
    h0_normal = 4 * d + h1_oc3

    kleppe_ellia: Optional[bool] = None
    flags: frozenset = frozenset()
    core: Optional[CoreCheck] = None
    if not omega:
        verdict = Verdict.BELOW_OMEGA
    elif h1_3 == 0:
        verdict = Verdict.REDUCED_COMPONENT
    elif key.b[5] == 2 and key.b[4] >= 3:
        verdict = Verdict.NON_REDUCED_COMPONENT
        core = verify_core(key)
    elif key.b[5] == 0:
        verdict = Verdict.NOT_COMPONENT
    else:
        verdict = Verdict.OPEN
        kleppe_ellia = h1_3 != 0 and h1_1 == 0
        flags = _literature_flags(d, g)

    return FamilyReport(
        key=key, d=d, g=g, in_omega=omega,
        dim_w=d + g + 18, chi_n=4 * d,
        h1_ideal_3=h1_3, h1_ideal_1=h1_1,
        h1_oc3=h1_oc3, h0_normal=h0_normal,
        verdict=verdict, kleppe_ellia_applies=kleppe_ellia,
        literature_flags=flags, core=core,
    )


def _descend(slots: int, max_val: int, total: int, out: list, prefix: list,
             a: int) -> None:
    # enumerate sorted b-tails with the given remaining sum
    if slots == 0:
        if total == 0:
            out.append(tuple(prefix))
        return
    if total > max_val * slots:
        return
    top = min(max_val, total)
    for v in range(top, -1, -1):
        if v * slots < total:
            break
        if len(prefix) == 2 and a < prefix[0] + prefix[1] + v:
            continue  # would break a >= b1+b2+b3; smaller v may still work
        prefix.append(v)
        _descend(slots - 1, v, total - v, out, prefix, a)
        prefix.pop()


def keys_of_degree(d: int) -> list:
    """All admissible keys of degree d, sorted lexicographically.

    The chamber inequalities force sum(bi) <= 2a, so 3a - d <= 2a gives
    a <= d, and sum(bi) >= 0 gives a >= ceil(d/3).
    """
    if d <= 9:
        raise DomainError(f"degree must be > 9, got {d}")
    keys = []
    for a in range(-(-d // 3), d + 1):
        total = 3 * a - d
        if total < 0:
            continue
        tails: list = []
        _descend(6, min(a - 1, total), total, tails, [], a)
        for b in tails:
            key = FamilyKey(a, b)
            if key.is_admissible():
                keys.append(key)
    keys.sort()
    return keys


def enumerate_keys(d: int, g: int) -> list:
    """All admissible keys with the given degree and genus.

    The range of a comes from eliminating the bi: with sum(bi) = 3a - d
    and sum(bi^2) = a^2 - (2g - 2 + d), Cauchy-Schwarz forces

        3a^2 - 6da + (d^2 + 12g - 12 + 6d) <= 0.

    Each candidate a is still checked against the inequality exactly,
    and every emitted key is rechecked against (d, g).
    """
    if d <= 9:
        raise DomainError(f"degree must be > 9, got {d}")
    disc = 24 * d * d - 144 * g + 144 - 72 * d
    if disc < 0:
        return []
    s = isqrt(disc)
    keys = []
    for a in range((6 * d - s) // 6 - 1, (6 * d + s) // 6 + 2):
        if a < 1 or 3 * a * a - 6 * d * a + (d * d + 12 * g - 12 + 6 * d) > 0:
            continue
        total = 3 * a - d
        square_total = a * a - (2 * g - 2 + d)
        if total < 0 or square_total < 0:
            continue
        tails: list = []
        _descend_sq(6, min(a - 1, total), total, square_total, tails, [], a)
        for b in tails:
            key = FamilyKey(a, b)
            if key.is_admissible():
                dd = degree(key.divisor_class)
                gg = genus(key.divisor_class)
                if (dd, gg) != (d, g):
                    raise InternalError(
                        f"enumeration produced {key} with (d,g)=({dd},{gg})")
                keys.append(key)
    keys.sort()
    return keys


def _descend_sq(slots: int, max_val: int, total: int, sq: int, out: list,
                prefix: list, a: int) -> None:
    # sorted tails with prescribed sum and sum of squares
    if slots == 0:
        if total == 0 and sq == 0:
            out.append(tuple(prefix))
        return
    if total > max_val * slots or sq > max_val * total:
        return
    if sq * slots < total * total:  # Cauchy-Schwarz lower bound
        return
    top = min(max_val, total, isqrt(sq) if sq >= 0 else 0)
    for v in range(top, -1, -1):
        if v * slots < total:
            break
        if len(prefix) == 2 and a < prefix[0] + prefix[1] + v:
            continue
        prefix.append(v)
        _descend_sq(slots - 1, v, total - v, sq - v * v, out, prefix, a)
        prefix.pop()


def brute_keys_by_genus(d: int) -> dict:
    """Reference enumeration: every a up to d, sum pruning only, grouped
    by genus.  Serves as the independent cross-check of enumerate_keys."""
    if d <= 9:
        raise DomainError(f"degree must be > 9, got {d}")
    groups: dict = {}
    for a in range(1, d + 1):
        total = 3 * a - d
        if total < 0:
            continue
        tails: list = []
        _descend(6, min(a - 1, total), total, tails, [], a)
        for b in tails:
            key = FamilyKey(a, b)
            if key.is_admissible():
                groups.setdefault(genus(key.divisor_class), []).append(key)
    for keys in groups.values():
        keys.sort()
    return groups


def enumerate_keys_brute(d: int, g: int) -> list:
    """Brute-force variant of enumerate_keys, for cross-checking."""
    return brute_keys_by_genus(d).get(g, [])


def sweep(d_min: int, d_max: int, omega_only: bool = True) -> Iterator[FamilyReport]:
    """Classify every admissible key with d in [d_min, d_max], in
    (d, key) order.  omega_only drops keys below Omega."""
    if d_min <= 9:
        raise DomainError(f"sweep needs d_min > 9, got {d_min}")
    if d_max < d_min:
        raise DomainError(f"empty degree range [{d_min}, {d_max}]")
    for d in range(d_min, d_max + 1):
        for key in keys_of_degree(d):
            if omega_only and genus(key.divisor_class) < 3 * d - 18:
                continue
            yield classify(key)
