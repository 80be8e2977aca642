"""Determinant-method bookkeeping: monomial sizes, tetrahedron sums,
parameter selection, auxiliary forms, the explicit determinant bound and the
good-cube scan."""

from diagforms.detmethod.auxiliary import AuxiliaryForm, auxiliary_form
from diagforms.detmethod.goodcubes import GoodCubeScan, good_cube_scan
from diagforms.detmethod.monomials import MonomialExp, monomial_order
from diagforms.detmethod.params import (
    ParameterSelection,
    exponent_bigN,
    exponent_main,
    exponent_Rk,
    exponent_Rkl,
    exponent_ternary,
    select_parameters,
    select_parameters_bigN,
)
from diagforms.detmethod.tetra import TetraStats, nu_from_s, s_from_delta, tetra_count, tetra_stats
from diagforms.detmethod.vandermonde import VandermondeCheck, vandermonde_bound_check

__all__ = [
    "AuxiliaryForm",
    "GoodCubeScan",
    "MonomialExp",
    "ParameterSelection",
    "TetraStats",
    "VandermondeCheck",
    "auxiliary_form",
    "exponent_bigN",
    "exponent_main",
    "exponent_Rk",
    "exponent_Rkl",
    "exponent_ternary",
    "good_cube_scan",
    "monomial_order",
    "nu_from_s",
    "s_from_delta",
    "select_parameters",
    "select_parameters_bigN",
    "tetra_count",
    "tetra_stats",
    "vandermonde_bound_check",
]
