"""Weighted polyanalytic Bergman spaces on the unit disk.

Jacobi polynomials and Gauss-Jacobi quadrature, disk polynomials, reproducing
kernels, radial Toeplitz operators as matrix sequences, and the Berezin
transform constructions.
"""
from .berezin import (
    FiniteRankOperator,
    TruncatedBasis,
    TruncationWarning,
    berezin_transform,
    englis_operator,
    identity_function_coeffs,
    nondensity_witness,
    separating_projection,
    toeplitz_quadratic_form,
)
from .disk import (
    BasisIndex,
    SpaceSpec,
    basis_indices_An,
    disk_inner_product,
    eval_disk_poly,
    gram_matrix,
    monomial_inner_product,
    polar_grid,
)
from .jacobi import (
    WeightParams,
    eval_jacobi,
    eval_normalized_jacobi,
    eval_reproducing_poly,
    eval_shifted_jacobi,
    norm_coef,
)
from .kernels import eval_poly_bergman_kernel, eval_true_poly_kernel, kernel_norm
from .quadrature import QuadratureRule, beta_function, gauss_jacobi_rule
from .radial import (
    CoefficientVector,
    MatrixSequence,
    apply_matrix_sequence,
    beta_coefficient,
    coefficients_Un,
    gamma_sequence,
    radialize_symbol,
    sup_block_norm,
    toeplitz_matrix_bruteforce,
    true_poly_eigenvalues,
)
from .symbols import RadialSymbol, parse_symbol

__version__ = "0.1.0"
