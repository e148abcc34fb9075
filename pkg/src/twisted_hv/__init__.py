"""Exact computations in Verma modules over the twisted Heisenberg-Virasoro algebra."""
from .algebra import C_I, C_L, C_LI, Generator, HighestWeight, I, L, LieElement, bracket, degree_of, sigma
from .scalars import ParamPoly, ScalarMatrix, det_fraction_free, nullspace, parse_rational, poly_eval
from .verma import (
    ModuleVector, PBWMonomial, VermaModule, apply_generator, apply_word, basis_of_degree,
    i_degree_split, is_pure_I, lowest_i_component, partial_derivative, verma_module,
)
from .shapovalov import gram_matrix, kn_constancy_check, p2, pair, phi, predicted_det_product, shapovalov_det
from .structure import (
    character_series, corollary6_check, lemma4_check, predicted_p, quotient_singular_check,
    singular_vectors, submodule_slice, verify_theorem1,
)

__version__ = "0.1.0"
