"""Jacobi test matrices with equally spaced, uniformly interlaced spectra.

Generators for the explicit matrix families, a Sturm-bisection
eigensolver, an inverse solver for two interlaced spectra, the closed-form
spring-mass chain and a reconstruction-error benchmark.
"""
from .eig import Spectrum, char_poly_eval, eigenvalues, gershgorin_bounds, min_gap, negcount
from .errors import (
    DegenerateDataError,
    FormatError,
    InterlacingError,
    NotJacobianError,
    ParameterError,
    RangeError,
    SizeError,
)
from .iep import (
    LastComponents,
    SpectrumPair,
    last_components,
    reconstruct_jacobian,
    reconstruction_residual,
    validate_interlacing,
)
from .proofcheck import ProofFactors, build_proof_factors, verify_proof_identities
from .springmass import (
    BoundaryCondition,
    SpringMassSystem,
    assemble_system_matrices,
    forward_frequencies,
    growth_ratios,
    masses_by_recurrence,
    solve_inverse_spring_mass,
)
from .tridiag import (
    GeneralTridiagonal,
    SymmetricTridiagonal,
    TestMatrixSpec,
    build_A,
    build_B_spring,
    build_kac,
    build_W,
    leading_principal_submatrix,
    normalize_signs,
    sign_flip,
    symmetrize,
)

__version__ = "0.1.0"
