"""Exact rational certificates and moments for the degenerate problem

    minimize 1 - x^2   subject to   (1 - x^2)^3 >= 0,

whose order-r relaxation (r >= 3) has optimal value -1/(r(r-2)).  The
package builds the optimal SOS certificate and moment sequence for any
order and verifies every supporting identity in exact arithmetic.
"""
from ._kernels import active_backend
from .errors import (
    BoundaryRootError,
    DegenerateRecurrenceError,
    DegreeOverflowError,
    IdentityViolationError,
    MomsosError,
    NotSymmetricError,
    OrderTooSmallError,
    ParityViolationError,
    SingularMatrixError,
    SingularShiftError,
    ZeroPolynomialError,
)
from .exactnum import (
    Polynomial,
    PsdReport,
    Rational,
    RationalMatrix,
    RootCount,
    SturmChain,
    cauchy_root_bound,
    mat_inverse,
    psd_certify,
    sturm_count,
)
from .momentside import (
    EvenPart,
    MomentSequence,
    OuterRoot,
    RootCounts,
    companion_matrix,
    count_roots,
    even_part,
    isolate_outer_root,
    localizing_matrix,
    moment_matrix,
    moments,
    newton_power_sums,
    riesz,
    verify_kernel_structure,
    verify_moment_monotonicity,
    verify_psd,
    verify_residue_identities,
)
from .orthopoly import chebyshev_t, chebyshev_u, derivative, gegenbauer_p2, jacobi
from .soscert import (
    Certificate,
    F_POLY,
    G_POLY,
    build_a,
    build_b,
    build_certificate,
    verify_archimedean,
    verify_derivative_identity,
    verify_identity,
    verify_jacobi_proportionality,
    verify_tu_decompositions,
)
from .verify import (
    CHECK_NAMES,
    CheckResult,
    VerificationReport,
    verify_order,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryRootError",
    "CHECK_NAMES",
    "Certificate",
    "CheckResult",
    "DegenerateRecurrenceError",
    "DegreeOverflowError",
    "EvenPart",
    "F_POLY",
    "G_POLY",
    "IdentityViolationError",
    "MomentSequence",
    "MomsosError",
    "NotSymmetricError",
    "OrderTooSmallError",
    "OuterRoot",
    "ParityViolationError",
    "Polynomial",
    "PsdReport",
    "Rational",
    "RationalMatrix",
    "RootCount",
    "RootCounts",
    "SingularMatrixError",
    "SingularShiftError",
    "SturmChain",
    "VerificationReport",
    "ZeroPolynomialError",
    "active_backend",
    "build_a",
    "build_b",
    "build_certificate",
    "cauchy_root_bound",
    "chebyshev_t",
    "chebyshev_u",
    "companion_matrix",
    "count_roots",
    "derivative",
    "even_part",
    "gegenbauer_p2",
    "isolate_outer_root",
    "jacobi",
    "localizing_matrix",
    "mat_inverse",
    "moment_matrix",
    "moments",
    "newton_power_sums",
    "psd_certify",
    "riesz",
    "sturm_count",
    "verify_archimedean",
    "verify_derivative_identity",
    "verify_identity",
    "verify_jacobi_proportionality",
    "verify_kernel_structure",
    "verify_moment_monotonicity",
    "verify_order",
    "verify_psd",
    "verify_range",
    "verify_residue_identities",
    "verify_tu_decompositions",
    "__version__",
]
