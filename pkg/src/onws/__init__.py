"""Orthonormal wavelet systems on the finite lattice Z_N x Z_N."""

from .digits import (
    DigitKind, DigitSet, character_table, digit_set, standard_partition,
    verify_digit_properties,
)
from .lattice import (
    DilationContext, IntMatrix2, NonIntegerDual, SingularMatrix, Subgroup,
    image_subgroup, inner_product_int, make_dilation, random_dilation,
)
from .spectral import dft, idft, inner, translate
from .uncertainty import (
    check_uncertainty, expand, fourier_basis_vector, localization_constants,
)
from .wavelet import (
    WaveletFamily, construct_onws, construct_single_generator, random_onws,
    random_unitary, system_matrix, verify_onws, verify_onws_gram,
    verify_single_generator,
)

__version__ = "0.1.0"

__all__ = [
    "DigitKind", "DigitSet", "DilationContext", "IntMatrix2", "NonIntegerDual",
    "SingularMatrix", "Subgroup", "WaveletFamily", "character_table",
    "check_uncertainty", "construct_onws", "construct_single_generator", "dft",
    "digit_set", "expand", "fourier_basis_vector", "idft", "image_subgroup",
    "inner", "inner_product_int", "localization_constants", "make_dilation",
    "random_dilation", "random_onws", "random_unitary", "standard_partition",
    "system_matrix", "translate", "verify_digit_properties", "verify_onws",
    "verify_onws_gram", "verify_single_generator",
]
