"""Weighted (semi-Hilbertian) operator toolkit.

Computes A-inner products, A-adjoints, A-operator seminorms, and
A-numerical radii on finite-dimensional complex spaces, and evaluates a
catalog of radius and seminorm inequalities with randomized verification
and application demos.
"""

from .aops import (
    AOperator,
    RadiusMethod,
    RadiusResult,
    a_adjoint,
    a_numerical_radius,
    a_op_norm,
    a_positive_power,
    in_b_a,
    in_b_a_half,
    is_a_positive,
    is_a_selfadjoint,
    oracle_a_numrad_sample,
    reduced_matrix,
)
from .bounds import BoundId, BoundParams, BoundReport, VerifyConfig, eval_pair, eval_single, verify_random
from .lemmas import LemmaId, LemmaReport, eval_lemma, verify_lemmas_random
from .space import SemiHilbertSpace, a_inner, a_norm_vec, make_space, random_operator_in_BA, random_space

__all__ = [
    "AOperator",
    "BoundId",
    "BoundParams",
    "BoundReport",
    "LemmaId",
    "LemmaReport",
    "RadiusMethod",
    "RadiusResult",
    "SemiHilbertSpace",
    "VerifyConfig",
    "a_adjoint",
    "a_inner",
    "a_norm_vec",
    "a_numerical_radius",
    "a_op_norm",
    "a_positive_power",
    "eval_lemma",
    "eval_pair",
    "eval_single",
    "in_b_a",
    "in_b_a_half",
    "is_a_positive",
    "is_a_selfadjoint",
    "make_space",
    "oracle_a_numrad_sample",
    "random_operator_in_BA",
    "random_space",
    "reduced_matrix",
    "verify_lemmas_random",
    "verify_random",
]

__version__ = "0.1.0"
