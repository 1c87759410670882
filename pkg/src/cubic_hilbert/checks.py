"""Executable consistency suite.

Each check sweeps an exhaustive range or a seeded random sample and
returns a CheckResult.  The acceptance tests assert on these results
one criterion at a time, and the CLI `selftest` subcommand prints them.
Every comparison is exact integer equality; there are no tolerances.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional, Sequence

from . import classifier, picard, quadric, weyl
from .classifier import FamilyKey, Verdict
from .cohomology import (_chi, _cohomology_coords, _h0_coords, _peel_coords,
                         h1_of_minus)
from .picard import CANONICAL, DivisorClass

DEFAULT_SEED = 20260825


class CheckResult(NamedTuple):
    name: str
    passed: bool
    checked: int
    detail: str


def _result(name: str, checked: int, failures: list) -> CheckResult:
    if not failures:
        return CheckResult(name, True, checked, "ok")
    return CheckResult(name, False, checked,
                       "; ".join(str(f) for f in failures[:3]))


def check_mumford() -> CheckResult:
    """The classical 56-dimensional family of degree-14, genus-24 curves."""
    failures: list = []
    key = FamilyKey.make(12, (4, 4, 4, 4, 4, 2))
    r = classifier.classify(key)
    expected = {
        "d": 14, "g": 24, "in_omega": True, "dim_w": 56, "chi_n": 56,
        "h1_ideal_3": 1, "h1_ideal_1": 0, "h1_oc3": 1, "h0_normal": 57,
        "verdict": Verdict.NON_REDUCED_COMPONENT,
    }
    for field, want in expected.items():
        got = getattr(r, field)
        if got != want:
            failures.append(f"{field}: got {got}, want {want}")
    core = r.core
    if core is None:
        failures.append("core check missing")
    else:
        if not (core.hypotheses_hold and core.consequences_hold):
            failures.append(f"core booleans not all true: {core}")
        if not core.delta.is_zero():
            failures.append(f"delta should vanish, got {core.delta}")
    if r.h0_normal - r.dim_w != r.h1_ideal_3:
        failures.append("obstruction gap mismatch")
    return _result("mumford_family", len(expected) + 3, failures)


def check_example_families(max_lambda: int = 10) -> CheckResult:
    """Two one-parameter ladders of non-reduced families."""
    failures: list = []
    checked = 0
    for lam in range(max_lambda + 1):
        for b1_off, d_law, g_law in (
            (3, lambda l: 2 * l + 19, lambda d: 4 * d - 37),
            (4, lambda l: 2 * l + 18, lambda d: (7 * d - 54) // 2),
        ):
            key = FamilyKey.make(lam + 12, (lam + b1_off, 3, 3, 3, 3, 2))
            r = classifier.classify(key)
            checked += 1
            if r.d != d_law(lam):
                failures.append(f"{key}: d={r.d}")
            if r.g != g_law(r.d):
                failures.append(f"{key}: g={r.g}")
            if r.verdict is not Verdict.NON_REDUCED_COMPONENT:
                failures.append(f"{key}: verdict={r.verdict.value}")
            if r.core is None or not (r.core.hypotheses_hold
                                      and r.core.consequences_hold):
                failures.append(f"{key}: core check failed")
    return _result("example_families", checked, failures)


def omega_reports(d_min: int = 10, d_max: int = 30) -> list:
    """All classification reports in Omega for the degree window."""
    return list(classifier.sweep(d_min, d_max, omega_only=True))


def check_closed_form(reports: Optional[Sequence] = None) -> CheckResult:
    """Tail-weight formula vs the general h1 route, d <= 30.

    Known to fail on the chamber-boundary keys with b3 = ... = b6 = 2
    and a = b1 + b2 + 2: there the base locus of the twisted system
    picks up a fifth line that the per-slot weight count cannot see,
    so the general route exceeds the closed form by one.
    """
    if reports is None:
        reports = omega_reports(10, 30)
    failures: list = []
    checked = 0
    for r in reports:
        checked += 1
        want = classifier.h1_ideal_3_closed_form(r.key)
        if r.h1_ideal_3 != want:
            failures.append(f"{r.key}: general {r.h1_ideal_3} != closed {want}")
    return _result("closed_form_agreement", checked, failures)


def check_gap_identity(reports: Optional[Sequence] = None) -> CheckResult:
    """h0_normal - dim_w = h1_ideal_3 and h1_oc3 >= h1_ideal_3 in Omega."""
    if reports is None:
        reports = omega_reports(12, 30)
    failures: list = []
    checked = 0
    for r in reports:
        if r.d < 12:
            continue
        checked += 1
        if r.h0_normal - r.dim_w != r.h1_ideal_3:
            failures.append(f"{r.key}: gap {r.h0_normal - r.dim_w} != {r.h1_ideal_3}")
        if r.h1_oc3 < r.h1_ideal_3:
            failures.append(f"{r.key}: h1_oc3 {r.h1_oc3} < {r.h1_ideal_3}")
    return _result("obstruction_gap_identity", checked, failures)


def _sorted_box(radius: int):
    values = range(radius, -radius - 1, -1)
    for a in range(-radius, radius + 1):
        for b in combinations_with_replacement(values, 6):
            yield a, b


def check_box_cohomology(radius: int = 6) -> CheckResult:
    """Exhaustive cohomology consistency on the coordinate box.

    Every function involved is invariant under permuting the bi (the
    first reduction step sorts them), so the box is covered exactly by
    its sorted representatives.  For each class: chi bookkeeping, h >= 0
    (violations raise), h0 positivity iff effective; for effective
    nonzero classes the direct h1(S, -D) formula must agree with the
    Serre/Riemann-Roch route.
    """
    failures: list = []
    checked = 0
    for a, b in _sorted_box(radius):
        checked += 1
        trip = _cohomology_coords(a, b)
        if trip.h0 - trip.h1 + trip.h2 != _chi(a, b):
            failures.append(f"chi mismatch at ({a}; {b})")
            continue
        p = _peel_coords(a, b)
        if p.effective != (trip.h0 > 0):
            failures.append(f"h0 positivity mismatch at ({a}; {b})")
            continue
        if p.effective and not (a == 0 and b[0] == 0 and b[5] == 0):
            direct = h1_of_minus(DivisorClass(a, b))
            general = _cohomology_coords(-a, tuple(-x for x in b)).h1
            if direct != general:
                failures.append(
                    f"h1(-D) routes disagree at ({a}; {b}): {direct} vs {general}")
    return _result("box_cohomology_routes", checked, failures)


def _random_class(rng: random.Random, radius: int) -> DivisorClass:
    return DivisorClass(rng.randint(-radius, radius),
                        tuple(rng.randint(-radius, radius) for _ in range(6)))


def _random_word(rng: random.Random, max_len: int) -> tuple:
    word = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.4:
            word.append(weyl.CREMONA)
        else:
            i, j = sorted(rng.sample(range(1, 7), 2))
            word.append(weyl.swap(i, j))
    return tuple(word)


def check_weyl_random(trials: int = 10000, max_len: int = 20,
                      seed: int = DEFAULT_SEED) -> CheckResult:
    """Random words: canonical form, pairing and degree invariance."""
    rng = random.Random(seed)
    failures: list = []
    for _ in range(trials):
        d1 = _random_class(rng, 10)
        d2 = _random_class(rng, 10)
        word = _random_word(rng, max_len)
        m1 = weyl.apply_word(d1, word)
        m2 = weyl.apply_word(d2, word)
        if picard.intersect(m1, m2) != picard.intersect(d1, d2):
            failures.append(f"pairing broken by {len(word)}-step word on {d1}, {d2}")
        if picard.degree(m1) != picard.degree(d1):
            failures.append(f"degree broken on {d1}")
        if weyl.apply_word(m1, weyl.inverse_word(word)) != d1:
            failures.append(f"word not inverted on {d1}")
        s0 = weyl.standardize(d1)
        s1 = weyl.standardize(m1)
        if s0.standard != s1.standard:
            failures.append(f"canonical forms differ: {d1} vs moved copy")
        if not weyl.is_standard(s0.standard):
            failures.append(f"standardize left chamber on {d1}")
        if weyl.apply_word(d1, s0.word) != s0.standard:
            failures.append(f"recorded word does not replay on {d1}")
        if failures:
            break
    return _result("weyl_random_words", trials, failures)


def check_adjunction_random(samples: int = 100000, radius: int = 10,
                            seed: int = DEFAULT_SEED) -> CheckResult:
    """Genus, adjunction and parity identities on random classes."""
    rng = random.Random(seed)
    failures: list = []
    for _ in range(samples):
        d = _random_class(rng, radius)
        sq = picard.self_intersection(d)
        dk = picard.intersect(d, CANONICAL)
        g = picard.genus(d)
        if g != picard.adjunction_genus(d):
            failures.append(f"adjunction mismatch at {d}")
            break
        if sq != 2 * g - 2 + picard.degree(d):
            failures.append(f"square/genus/degree mismatch at {d}")
            break
        if (sq + dk) % 2 != 0:
            failures.append(f"odd D.D + D.K at {d}")
            break
    return _result("adjunction_identities", samples, failures)


def check_core_consistency(reports: Optional[Sequence] = None,
                           seed: int = DEFAULT_SEED) -> CheckResult:
    """Non-reduced tail condition vs the lattice core check, d <= 30.

    In Omega: d >= 12 with b6 = 2 and b5 >= 3 must give a full all-true
    core check with h1 = 1, and conversely h1 = 1 arises only that way.
    (For d < 12 the twisted ideal cohomology vanishes, so a b-tail key
    of degree 10 or 11 is a reduced component instead.)  On a seeded
    sample of other keys the single-line test must agree with the
    b-tail condition, which does not depend on d.
    """
    if reports is None:
        reports = omega_reports(10, 30)
    rng = random.Random(seed)
    failures: list = []
    checked = 0
    others = []
    for r in reports:
        checked += 1
        tail = r.key.b[5] == 2 and r.key.b[4] >= 3
        if tail and r.d >= 12:
            core = r.core or classifier.verify_core(r.key)
            if not (core.hypotheses_hold and core.consequences_hold):
                failures.append(f"{r.key}: core booleans not all true")
            if r.h1_ideal_3 != 1:
                failures.append(f"{r.key}: h1 = {r.h1_ideal_3} != 1")
            if r.verdict is not Verdict.NON_REDUCED_COMPONENT:
                failures.append(f"{r.key}: verdict {r.verdict.value}")
        else:
            if r.h1_ideal_3 == 1:
                failures.append(f"{r.key}: h1 = 1 without the b-tail condition")
            others.append(r.key)
    for key in rng.sample(others, min(200, len(others))):
        tail = key.b[5] == 2 and key.b[4] >= 3
        single = classifier.verify_core(key).fixed_part_is_single_line
        checked += 1
        if single != tail:
            failures.append(f"{key}: single-line {single} vs tail {tail}")
    return _result("core_consistency", checked, failures)


def check_quadric(max_side: int = 50) -> CheckResult:
    """Bidegree identities and classifier consistency on the quadric."""
    failures: list = []
    checked = 0
    for a in range(1, max_side + 1):
        for b in range(1, a + 1):
            if a + b <= 4:
                continue
            checked += 1
            fam = quadric.classify_quadric(a, b)
            if (a - 3) * (b - 3) != fam.g - 2 * fam.d + 8:
                failures.append(f"({a},{b}): factorisation identity fails")
            if fam.dim_w != 2 * fam.d + fam.g + 8:
                failures.append(f"({a},{b}): dimension fails")
            want_codim = max(2 * fam.d - 8 - fam.g, 0)
            if fam.codim != want_codim or fam.h1_ideal_2 != want_codim:
                failures.append(f"({a},{b}): codim {fam.codim} vs {want_codim}")
            if (fam.verdict == quadric.COMPONENT) != (fam.g >= 2 * fam.d - 8):
                failures.append(f"({a},{b}): verdict fails")
    for m in range(-8, 9):
        for n in range(-8, 9):
            checked += 1
            t = quadric.cohomology_quadric(m, n)
            if t.h0 - t.h1 + t.h2 != (m + 1) * (n + 1):
                failures.append(f"chi fails at O({m},{n})")
            if t.h2 != quadric.cohomology_quadric(-m - 2, -n - 2).h0:
                failures.append(f"duality fails at O({m},{n})")
    return _result("quadric_families", checked, failures)


def check_enumeration(d_min: int = 10, d_max: int = 16) -> CheckResult:
    """Bounded enumeration vs brute force over a <= d, all realizable g."""
    failures: list = []
    checked = 0
    for d in range(d_min, d_max + 1):
        groups = classifier.brute_keys_by_genus(d)
        flat = sorted(k for keys in groups.values() for k in keys)
        if flat != classifier.keys_of_degree(d):
            failures.append(f"d={d}: degree-slice generators disagree")
        g_cap = (d * d - 3 * d + 6) // 6 + 2
        for g in range(0, g_cap + 1):
            checked += 1
            fast = classifier.enumerate_keys(d, g)
            slow = groups.get(g, [])
            if fast != slow:
                failures.append(f"(d,g)=({d},{g}): {len(fast)} vs {len(slow)} keys")
    return _result("enumeration_vs_bruteforce", checked, failures)


def run_all(fast: bool = False) -> list:
    """Run every check; `fast` shrinks ranges for a quick smoke pass."""
    if fast:
        reports = omega_reports(10, 18)
        jobs = (
            lambda: check_mumford(),
            lambda: check_example_families(3),
            lambda: check_closed_form(reports),
            lambda: check_gap_identity(reports),
            lambda: check_box_cohomology(3),
            lambda: check_weyl_random(1000),
            lambda: check_adjunction_random(10000),
            lambda: check_core_consistency(reports),
            lambda: check_quadric(20),
            lambda: check_enumeration(10, 12),
        )
    else:
        reports = omega_reports(10, 30)
        jobs = (
            lambda: check_mumford(),
            lambda: check_example_families(),
            lambda: check_closed_form(reports),
            lambda: check_gap_identity(reports),
            lambda: check_box_cohomology(),
            lambda: check_weyl_random(),
            lambda: check_adjunction_random(),
            lambda: check_core_consistency(reports),
            lambda: check_quadric(),
            lambda: check_enumeration(),
        )
    results = []
    for job in jobs:
        try:
            results.append(job())
        except Exception as exc:  # surface breakage as a failed check
            results.append(CheckResult(type(exc).__name__, False, 0, str(exc)))
    return results
