"""Exact divisor-class arithmetic on smooth cubic surfaces and
classification of the Hilbert-scheme families their curves sweep out.

The public surface mirrors the module layout: `picard` for the lattice,
`weyl` for reduction to the standard chamber, `cohomology` for
effectivity and sheaf cohomology, `classifier` for family verdicts and
enumeration, `quadric` for the bidegree counterpart, `report` for CSV
and figure rendering, and `cli` for the command-line front end.
"""

from .classifier import (CoreCheck, FamilyKey, FamilyReport, Verdict,
                         classify, enumerate_keys, enumerate_keys_brute,
                         h1_ideal, h1_ideal_3_closed_form, in_omega,
                         keys_of_degree, sweep, verify_core)
from .cohomology import (CohomologyTriple, MobileKind, SystemAnalysis,
                         cohomology, decompose, h0_multiple_conic,
                         h0_multiple_line, h1_of_minus, is_big_and_nef,
                         is_nef)
from .errors import DomainError, InternalError
from .picard import (CANONICAL, HYPERPLANE, ZERO, DivisorClass,
                     adjunction_genus, degree, euler_characteristic,
                     exceptional, genus, intersect, parse_class,
                     self_intersection)
from .quadric import QuadricFamily, classify_quadric, cohomology_quadric
from .weyl import (CREMONA, Reflection, StandardForm, apply_reflection,
                   apply_word, inverse_word, is_standard, standardize, swap)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL", "CREMONA", "HYPERPLANE", "ZERO",
    "CohomologyTriple", "CoreCheck", "DivisorClass", "DomainError",
    "FamilyKey", "FamilyReport", "InternalError", "MobileKind",
    "QuadricFamily", "Reflection", "StandardForm", "SystemAnalysis",
    "Verdict", "adjunction_genus", "apply_reflection", "apply_word",
    "classify", "classify_quadric", "cohomology", "cohomology_quadric",
    "decompose", "degree", "enumerate_keys", "enumerate_keys_brute",
    "euler_characteristic", "exceptional", "genus", "h0_multiple_conic",
    "h0_multiple_line", "h1_ideal", "h1_ideal_3_closed_form",
    "h1_of_minus", "in_omega", "intersect", "inverse_word",
    "is_big_and_nef", "is_nef", "is_standard", "keys_of_degree",
    "parse_class", "self_intersection", "standardize", "swap", "sweep",
    "verify_core",
]
