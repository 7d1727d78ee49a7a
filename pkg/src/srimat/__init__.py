"""Involutions by descent number, symmetric integer matrices, and a
sign-reversing involution relating their alternating counts."""

from .combinatorics import (
    DEFAULT_BOUND,
    DescentSet,
    Involution,
    Permutation,
    descent_set,
    enumerate_involutions,
    involution_descent_table,
    involution_polynomial,
    telephone_number,
)
from .matrices import (
    MatrixFamilyKey,
    SymMatrix,
    count_table,
    enumerate_all,
    enumerate_family,
    parse_matrix,
    render_matrix,
    validate_membership,
)
from .pairing import CaseLabel, PhiResult, classify, fixed_point, leading_index, pair_all, phi
from .polynomial import IntPolynomial, poly_add, poly_binomial_power, poly_multiply
from .verify import (
    VerificationReport,
    oracle_T_from_involutions,
    shape_checks,
    verify_alternating_sum,
    verify_corollary,
    verify_main_theorem,
)

__all__ = [
    "CaseLabel",
    "DEFAULT_BOUND",
    "DescentSet",
    "IntPolynomial",
    "Involution",
    "MatrixFamilyKey",
    "Permutation",
    "PhiResult",
    "SymMatrix",
    "VerificationReport",
    "classify",
    "count_table",
    "descent_set",
    "enumerate_all",
    "enumerate_family",
    "enumerate_involutions",
    "fixed_point",
    "involution_descent_table",
    "involution_polynomial",
    "leading_index",
    "oracle_T_from_involutions",
    "pair_all",
    "parse_matrix",
    "phi",
    "poly_add",
    "poly_binomial_power",
    "poly_multiply",
    "render_matrix",
    "shape_checks",
    "telephone_number",
    "validate_membership",
    "verify_alternating_sum",
    "verify_corollary",
    "verify_main_theorem",
]
