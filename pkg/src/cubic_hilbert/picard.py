"""Integer Picard lattice of a smooth cubic surface.

A divisor class is stored by its coordinates (a; b1,...,b6) in an
exceptional basis {l, e1,...,e6}: the class is a*l - sum(bi * ei).
The intersection form is diagonal with signature (1, 6):

    l . l = 1,    ei . ej = -delta_ij,    l . ei = 0

so intersect((a;b), (a';b')) = a*a' - sum(bi * bi').  The hyperplane
section is h = (3; 1,1,1,1,1,1) and the canonical class is k = -h.
Everything here is exact integer arithmetic; no floats appear anywhere
in this package's numeric paths.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import DomainError

#: default bound on |a|, |bi| for classes arriving through the CLI
DEFAULT_MAX_COORD = 10**6


class DivisorClass(NamedTuple):
    """Divisor class (a; b1..b6) on the cubic surface.

    `b` is always a tuple of exactly six ints.  Instances are immutable
    and hashable; arithmetic returns new instances.
    """

    a: int
    b: tuple

    @classmethod
    def make(cls, a: int, b: Iterable[int]) -> "DivisorClass":
        bt = tuple(int(x) for x in b)
        if len(bt) != 6:
            raise DomainError(f"need exactly 6 b-coordinates, got {len(bt)}")
        return cls(int(a), bt)

    @property
    def coords(self) -> tuple:
        return (self.a,) + self.b

    def is_zero(self) -> bool:
        return self.a == 0 and all(x == 0 for x in self.b)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a,
                            tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a,
                            tuple(x - y for x, y in zip(self.b, other.b)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, tuple(-x for x in self.b))

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.a * n, tuple(x * n for x in self.b))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "({}; {})".format(self.a, ",".join(str(x) for x in self.b))


ZERO = DivisorClass(0, (0,) * 6)
HYPERPLANE = DivisorClass(3, (1,) * 6)
CANONICAL = DivisorClass(-3, (-1,) * 6)


def exceptional(i: int) -> DivisorClass:
    """Class of the i-th exceptional line ei, 1-based: (0; ..,-1,..)."""
    if not 1 <= i <= 6:
        raise DomainError(f"exceptional index must be in 1..6, got {i}")
    return DivisorClass(0, tuple(-1 if j == i - 1 else 0 for j in range(6)))


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    return d1.a * d2.a - sum(x * y for x, y in zip(d1.b, d2.b))


def self_intersection(d: DivisorClass) -> int:
    return d.a * d.a - sum(x * x for x in d.b)


def degree(d: DivisorClass) -> int:
    """Degree of the class as a space curve: intersection with h."""
    return 3 * d.a - sum(d.b)


def _choose2(n: int) -> int:
    # binomial(n, 2) as the polynomial n(n-1)/2, valid for any integer n
    return n * (n - 1) // 2


def genus(d: DivisorClass) -> int:
    """Arithmetic genus binom(a-1, 2) - sum binom(bi, 2)."""
    return _choose2(d.a - 1) - sum(_choose2(x) for x in d.b)


def adjunction_genus(d: DivisorClass) -> int:
    """Genus via adjunction, (D.D + D.K)/2 + 1; equals genus(d) identically."""
    return (self_intersection(d) + intersect(d, CANONICAL)) // 2 + 1


def euler_characteristic(d: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic chi(O_S(D)) = D.(D-K)/2 + 1."""
    return (self_intersection(d) - intersect(d, CANONICAL)) // 2 + 1


def parse_class(text: str, max_coord: int | None = None) -> DivisorClass:
    """Parse "a,b1,b2,b3,b4,b5,b6" into a DivisorClass.

    `max_coord` bounds |a| and every |bi| (used by the CLI; pass None to
    skip the bound).  Raises DomainError on malformed input.
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 7:
        raise DomainError(f"expected 7 comma-separated integers, got {len(parts)}")
    try:
        nums = [int(p) for p in parts]
    except ValueError as exc:
        raise DomainError(f"non-integer coordinate in {text!r}") from exc
    if max_coord is not None:
        bad = [n for n in nums if abs(n) > max_coord]
        if bad:
            raise DomainError(
                f"coordinate {bad[0]} exceeds the bound {max_coord}")
    return DivisorClass.make(nums[0], nums[1:])
