"""Curves on a smooth quadric surface: the rank-2 counterpart.

A curve of bidegree (a, b) on Q = P1 x P1, with a >= b > 0, has degree
d = a + b and genus g = (a-1)(b-1).  Line-bundle cohomology on Q splits
off the two rulings:

    h^i(O_Q(m, n)) built from p(k) = max(k+1, 0), q(k) = max(-k-1, 0)

so h0 = p(m)p(n), h1 = p(m)q(n) + q(m)p(n), h2 = q(m)q(n), with
chi = (m+1)(n+1) and Serre duality h2(m, n) = h0(-m-2, -n-2).

For d > 4 the family of such curves has dimension 2d + g + 8 and fills
out a component of the Hilbert scheme iff g >= 2d - 8; below that bound
it sits in codimension 2d - 8 - g, which equals h1 of the quadric ideal
twist h1(I_C(2)) = h1(O_Q(a-4, b-4)).  The factorisation identity
(a-3)(b-3) = g - 2d + 8 makes the sign of g - (2d-8) readable off the
bidegree.  Either way the generic curve of the family is smooth, which
the report carries as a fixed informational field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import CohomologyTriple
from .errors import DomainError, InternalError

COMPONENT = "component"
PROPER_SUBVARIETY = "proper_subvariety"


def _p(k: int) -> int:
    return k + 1 if k >= -1 else 0


def _q(k: int) -> int:
    return -k - 1 if k <= -1 else 0


def cohomology_quadric(m: int, n: int) -> CohomologyTriple:
    """(h0, h1, h2) of O_Q(m, n) on the smooth quadric."""
    return CohomologyTriple(
        _p(m) * _p(n),
        _p(m) * _q(n) + _q(m) * _p(n),
        _q(m) * _q(n),
    )


@dataclass(frozen=True)
class QuadricFamily:
    a: int
    b: int
    d: int
    g: int
    dim_w: int
    h1_ideal_2: int
    verdict: str
    codim: int  # 0 when the family is a component
    generically_smooth: bool  # informational, true for every family here


def classify_quadric(a: int, b: int) -> QuadricFamily:
    """Report for the bidegree-(a, b) family; needs a >= b > 0, a+b > 4."""
    if not (a >= b > 0):
        raise DomainError(f"bidegree must satisfy a >= b > 0, got ({a}, {b})")
    d = a + b
    if d <= 4:
        raise DomainError(f"degree must be > 4, got d={d} for ({a}, {b})")
    g = (a - 1) * (b - 1)
    h1_2 = cohomology_quadric(a - 4, b - 4).h1
    if g >= 2 * d - 8:
        verdict, codim = COMPONENT, 0
        if h1_2 != 0:
            raise InternalError(
                f"component bidegree ({a}, {b}) has h1(I_C(2)) = {h1_2}")
    else:
        verdict, codim = PROPER_SUBVARIETY, 2 * d - 8 - g
        if h1_2 != codim:
            raise InternalError(
                f"codimension {codim} disagrees with h1(I_C(2)) = {h1_2} "
                f"for ({a}, {b})")
    return QuadricFamily(a=a, b=b, d=d, g=g, dim_w=2 * d + g + 8,
                         h1_ideal_2=h1_2, verdict=verdict, codim=codim,
                         generically_smooth=True)
