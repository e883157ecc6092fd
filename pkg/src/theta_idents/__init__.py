"""Numerical library and verification engine for cyclic theta-ratio identities."""

from .errors import (
    ConstraintViolation,
    ConvergenceError,
    DivisionNearZeroError,
    DomainError,
    EmptyParameterSpace,
    ParseError,
    PoleError,
    SchemaError,
    ThetaIdentsError,
    UnboundSymbolError,
    UnsupportedFactor,
)
from .special import (
    EllipticContext,
    ThetaArgument,
    ThetaIndex,
    agm_jacobi,
    elliptic_E,
    elliptic_E_via_theta,
    elliptic_K,
    jacobi_elliptic,
    jacobi_zeta,
    tau_from_m,
    theta,
    theta_dz,
)

__version__ = "0.1.0"
