"""End-to-end weight generation: decision point -> calibrated density -> weights.

The continuous weight density is sampled at the n evenly spaced positions
``(i-1)/(n-1)`` on [0, 1] and normalised.  The degenerate ``delta = 0``
request bypasses calibration entirely and places all mass on the position
nearest to ``alpha`` (Dirac path).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .calibrate import DEFAULT_EPSILON, CalibrationResult, DecisionPoint, calibrate
from .errors import DomainError, InfeasiblePointError
from .metrics import WeightVector, dispersion, orness, tradeoff
from .truncnorm import TruncNormSpec

__all__ = [
    "GenerationOutcome",
    "discretize",
    "dirac_weights",
    "generate_weights",
]


@dataclass(frozen=True)
class GenerationOutcome:
    """A generated weight vector with the metrics it actually achieves.

    Discretisation shifts the properties away from the requested
    ``(alpha, delta)`` at small n, so callers must read the achieved
    metrics rather than assume ``orness == alpha``.  ``method`` is
    ``"calibrated"``, ``"dirac"`` (delta = 0) or ``"single"`` (n = 1,
    where the metrics are undefined and reported as NaN).
    """

    point: DecisionPoint
    weights: WeightVector
    calibration: CalibrationResult | None
    achieved_orness: float
    achieved_dispersion: float
    achieved_tradeoff: float
    method: str


def discretize(spec: TruncNormSpec, n: int) -> WeightVector:
    """Sample the truncated density at n grid positions and normalise.

    Only density ratios matter, so the evaluation works with shifted
    log-densities: weights stay exact even where the raw density values
    would underflow (tiny sigma), degrading continuously into the Dirac
    limit instead of collapsing to 0/0.
    """
    n = _check_n(n)
    inv_sigma = 1.0 / spec.sigma
    half_logs = []
    for i in range(n):
        z = (i / (n - 1) - spec.mu) * inv_sigma
        half_logs.append(-0.5 * z * z)
    shift = max(half_logs)
    raw = [math.exp(h - shift) for h in half_logs]
    total = math.fsum(raw)
    return WeightVector(tuple(r / total for r in raw))


def dirac_weights(alpha: float, n: int) -> WeightVector:
    """All mass on the grid position nearest to ``alpha``; ties go to the lower index."""
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must be in [0, 1], got {alpha!r}")
    n = _check_n(n)
    best, best_gap = 0, math.inf
    for i in range(n):
        gap = abs(i / (n - 1) - alpha)
        if gap < best_gap:
            best, best_gap = i, gap
    w = [0.0] * n
    w[best] = 1.0
    return WeightVector(tuple(w))


def _check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return n


def generate_weights(
    point: DecisionPoint,
    n: int,
    epsilon: float = DEFAULT_EPSILON,
) -> GenerationOutcome:
    """Generate n order weights for a decision point.

    Raises :class:`InfeasiblePointError` when calibration rejects the
    point; the error carries the parabolic bound ``4*alpha*(1-alpha)``
    and the best distance achieved.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n == 1:
        # one criterion: aggregation is the identity, metrics are undefined
        return GenerationOutcome(
            point=point,
            weights=WeightVector((1.0,)),
            calibration=None,
            achieved_orness=math.nan,
            achieved_dispersion=math.nan,
            achieved_tradeoff=math.nan,
            method="single",
        )
    if point.delta == 0.0:
        weights = dirac_weights(point.alpha, n)
        return _outcome(point, weights, None, "dirac")

    result = calibrate(point, epsilon)
    if not result.accepted:
        raise InfeasiblePointError(
            alpha=point.alpha,
            delta=point.delta,
            delta_max=4.0 * point.alpha * (1.0 - point.alpha),
            distance=result.distance,
        )
    weights = discretize(result.spec, n)
    return _outcome(point, weights, result, "calibrated")


def _outcome(
    point: DecisionPoint,
    weights: WeightVector,
    calibration: CalibrationResult | None,
    method: str,
) -> GenerationOutcome:
    return GenerationOutcome(
        point=point,
        weights=weights,
        calibration=calibration,
        achieved_orness=orness(weights),
        achieved_dispersion=dispersion(weights),
        achieved_tradeoff=tradeoff(weights),
        method=method,
    )
