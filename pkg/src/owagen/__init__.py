"""owagen: OWA weight vectors from a requested level of risk and trade-off.

The core pipeline maps a decision point (risk ``alpha``, trade-off
``delta``) to the truncated normal distribution on [0, 1] whose first two
post-truncation moments realise that point, then discretises the density
into n order weights.  Feasible points form a parabolic region of the
unit square; the :mod:`owagen.explore` module reproduces that region and
related sensitivity experiments.
"""

from .calibrate import (
    DEFAULT_EPSILON,
    CalibrationResult,
    DecisionPoint,
    NelderMeadResult,
    SimplexConfig,
    calibrate,
    distance,
    is_feasible_parabola,
    nelder_mead,
    target_moments,
)
from .errors import (
    DegenerateDimensionError,
    DimensionMismatchError,
    DomainError,
    InfeasiblePointError,
    InsufficientDataError,
    NumericalError,
    UnderflowError,
)
from .explore import (
    FrontierFit,
    SensitivityGrid,
    SweepRecord,
    epsilon_sweep,
    fit_frontier,
    latin_hypercube,
    run_sweep,
    sensitivity_grid,
)
from .generate import GenerationOutcome, dirac_weights, discretize, generate_weights
from .metrics import (
    CriteriaSet,
    WeightVector,
    andness,
    dispersion,
    orness,
    owa_aggregate,
    tradeoff,
)
from .truncnorm import (
    SIGMA_W_MAX,
    TruncNormSpec,
    oracle_moments,
    pdf,
    truncated_mean,
    truncated_moments,
    truncated_std,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPSILON",
    "SIGMA_W_MAX",
    "CalibrationResult",
    "CriteriaSet",
    "DecisionPoint",
    "DegenerateDimensionError",
    "DimensionMismatchError",
    "DomainError",
    "FrontierFit",
    "GenerationOutcome",
    "InfeasiblePointError",
    "InsufficientDataError",
    "NelderMeadResult",
    "NumericalError",
    "SensitivityGrid",
    "SimplexConfig",
    "SweepRecord",
    "TruncNormSpec",
    "UnderflowError",
    "WeightVector",
    "andness",
    "calibrate",
    "dirac_weights",
    "discretize",
    "dispersion",
    "distance",
    "epsilon_sweep",
    "fit_frontier",
    "generate_weights",
    "is_feasible_parabola",
    "latin_hypercube",
    "nelder_mead",
    "oracle_moments",
    "orness",
    "owa_aggregate",
    "pdf",
    "run_sweep",
    "sensitivity_grid",
    "target_moments",
    "tradeoff",
    "truncated_mean",
    "truncated_moments",
    "truncated_std",
]
