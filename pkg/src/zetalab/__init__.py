"""zetalab: numerical audits of zeta-function manipulations.

Bilinear complex vector geometry, zeta/log-gamma evaluation, oscillatory
partial sums, solids of revolution, critical-line zero scouting, and
finite-truncation claim audits.
"""

__version__ = "0.1.0"

from .complex_bilinear import (  # noqa: E402
    BranchPolicy,
    CVector,
    ExactComplex,
    bcos_angle,
    bdot,
    bnorm,
    bnorm_sq,
    cosine_theorem_residual,
    principal_sqrt,
    triangle_area,
    triangle_area_sq,
)
from .errors import (  # noqa: E402
    ConvergenceError,
    DegenerateRegionError,
    DimensionError,
    DomainError,
    IsotropicVectorError,
    PoleError,
    ZetaLabError,
)
from .zeta_core import (  # noqa: E402
    EvalResult,
    SPoint,
    functional_eq_residual,
    gamma_limit,
    log_gamma,
    zeta_eta,
    zeta_partial,
    zeta_reflected,
)
