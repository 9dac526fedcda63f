"""Exact permutation statistics, codes and bijections, with exhaustive
verification of joint equidistribution identities over S_n."""

from .bijections import apply_map, foata, phi, phi_inverse
from .codes import (CodeVector, a_code, a_code_inverse, b_code, b_code_inverse,
                    induced_set, lehmer, lehmer_inverse, ones_set)
from .perm import (CycleDecomposition, DegreeCapError, Permutation, PermutationError,
                   all_codes, all_perms, complement, cycles, inverse, parse, reverse)
from .qpoly import Poly, closed_form_main, closed_form_petersen, q_integer
from .registry import THEOREMS, run_many, run_theorem
from .stats import ordinary_stat, set_stat, shifted_cycle_1, star
from .verify import (Engine, StatTuple, VerificationReport, check_equidist,
                     check_symmetric_pair, check_transfer, dist_numeric, dist_setvalued)

__all__ = [
    "CodeVector", "CycleDecomposition", "DegreeCapError", "Engine", "Permutation",
    "PermutationError", "Poly", "StatTuple", "THEOREMS", "VerificationReport", "a_code",
    "a_code_inverse", "all_codes", "all_perms", "apply_map", "b_code", "b_code_inverse",
    "check_equidist", "check_symmetric_pair", "check_transfer", "closed_form_main",
    "closed_form_petersen", "complement", "cycles", "dist_numeric", "dist_setvalued", "foata",
    "induced_set", "inverse", "lehmer", "lehmer_inverse", "ones_set", "ordinary_stat", "parse",
    "phi", "phi_inverse", "q_integer", "reverse", "run_many", "run_theorem", "set_stat",
    "shifted_cycle_1", "star",
]

__version__ = "0.1.0"
