"""Composition and conjugation for SU(N) exponentials via spectral reduction."""

from .algebra import (
    GeneratorBasis,
    LinearElement,
    StructureTensors,
    algebra_matrix,
    build_basis,
    cached_algebra,
    cross,
    dot_sym,
    from_matrix,
    product_reduce,
    serialize_algebra,
    structure_constants,
    to_matrix,
)
from .bch import (
    AdjointKernel,
    build_adjoint_kernel,
    compose,
    compose_direct,
    compose_linear,
    similarity,
    similarity_direct,
    su2_compose_closed_form,
)
from .errors import (
    BranchCutError,
    ConstraintViolationError,
    ConvergenceError,
    DegenerateSpectrumError,
    IllConditionedError,
    NumericalDomainError,
    SingularMatrixError,
)
from .linearize import (
    PowerTable,
    delinearize_exp,
    exp_matrix,
    exp_minus_i,
    exp_plus_i,
    f0_trace,
    linearize_fn,
    log_coords,
    power_table,
)
from .sampling import random_coords
from .spectral import (
    CharPoly,
    SpectralDecomposition,
    apply_spectral,
    char_poly,
    eig_hermitian,
    eig_unitary,
    expansion_coeffs,
    expansion_coeffs_derivative,
    lagrange_projectors,
)
from .verify import RunConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "AdjointKernel",
    "BranchCutError",
    "CharPoly",
    "ConstraintViolationError",
    "ConvergenceError",
    "DegenerateSpectrumError",
    "GeneratorBasis",
    "IllConditionedError",
    "LinearElement",
    "NumericalDomainError",
    "PowerTable",
    "RunConfig",
    "SingularMatrixError",
    "SpectralDecomposition",
    "StructureTensors",
    "algebra_matrix",
    "apply_spectral",
    "build_adjoint_kernel",
    "build_basis",
    "cached_algebra",
    "char_poly",
    "compose",
    "compose_direct",
    "compose_linear",
    "cross",
    "delinearize_exp",
    "dot_sym",
    "eig_hermitian",
    "eig_unitary",
    "exp_matrix",
    "exp_minus_i",
    "exp_plus_i",
    "expansion_coeffs",
    "expansion_coeffs_derivative",
    "f0_trace",
    "from_matrix",
    "lagrange_projectors",
    "linearize_fn",
    "log_coords",
    "power_table",
    "product_reduce",
    "random_coords",
    "run_suite",
    "serialize_algebra",
    "similarity",
    "similarity_direct",
    "structure_constants",
    "su2_compose_closed_form",
    "to_matrix",
]
