"""Moment matching: find the parent normal whose truncated moments hit a target.

A decision point (risk ``alpha``, trade-off ``delta``) maps to target
truncated moments ``mu_w = alpha`` and ``sigma_w = delta / (2*sqrt(3))``.
The parent ``(mu, sigma)`` realising them is found with a Nelder-Mead
simplex search minimising the Euclidean distance in moment space; a point
is accepted when that distance falls below ``epsilon``.

Not every point is attainable: the feasible region is bounded above by
(approximately) the parabola ``delta = 4*alpha*(1-alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .errors import DomainError
from .truncnorm import TruncNormSpec, truncated_moments

__all__ = [
    "DEFAULT_EPSILON",
    "MU_BOUNDS",
    "SIGMA_BOUNDS",
    "DecisionPoint",
    "CalibrationResult",
    "SimplexConfig",
    "NelderMeadResult",
    "target_moments",
    "distance",
    "nelder_mead",
    "calibrate",
    "is_feasible_parabola",
]

#: Acceptance threshold at the start of the rejected-fraction plateau.
DEFAULT_EPSILON = 1e-8

#: Parent-parameter search box; beyond it the truncated distribution is
#: numerically indistinguishable from a boundary case.
MU_BOUNDS = (-5.0, 6.0)
SIGMA_BOUNDS = (1e-6, 1e3)

_TWO_SQRT3 = 2.0 * math.sqrt(3.0)


@dataclass(frozen=True)
class DecisionPoint:
    """A requested level of risk ``alpha`` and trade-off ``delta``, both in [0, 1]."""

    alpha: float
    delta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "delta", float(self.delta))
        if not (0.0 <= self.alpha <= 1.0) or not (0.0 <= self.delta <= 1.0):
            raise DomainError(
                f"decision point must lie in [0, 1]^2, got ({self.alpha!r}, {self.delta!r})"
            )

    def mirrored(self) -> "DecisionPoint":
        return DecisionPoint(1.0 - self.alpha, self.delta)


@dataclass(frozen=True)
class CalibrationResult:
    """Outcome of calibrating one decision point."""

    point: DecisionPoint
    spec: TruncNormSpec
    distance: float
    accepted: bool
    iterations: int
    function_evals: int

    def reflected(self) -> "CalibrationResult":
        return CalibrationResult(
            point=self.point.mirrored(),
            spec=self.spec.reflected(),
            distance=self.distance,
            accepted=self.accepted,
            iterations=self.iterations,
            function_evals=self.function_evals,
        )


@dataclass(frozen=True)
class SimplexConfig:
    """Nelder-Mead coefficients and stopping rules."""

    reflect: float = 1.0
    expand: float = 2.0
    contract: float = 0.5
    shrink: float = 0.5
    diameter_tol: float = 1e-12
    spread_tol: float = 1e-14
    max_iterations: int = 2000
    initial_step: tuple[float, ...] = (0.25, 0.5)


@dataclass(frozen=True)
class NelderMeadResult:
    x: tuple[float, ...]
    value: float
    iterations: int
    evals: int


def target_moments(p: DecisionPoint) -> tuple[float, float]:
    """Truncated moments requested by a decision point: (alpha, delta/(2*sqrt(3)))."""
    return p.alpha, p.delta / _TWO_SQRT3


def distance(target: Sequence[float], candidate: Sequence[float]) -> float:
    """Euclidean distance between two (mean, std) pairs in moment space."""
    t0, t1 = (float(v) for v in target)
    c0, c1 = (float(v) for v in candidate)
    if not all(math.isfinite(v) for v in (t0, t1, c0, c1)):
        raise DomainError("moment pairs must be finite")
    return math.hypot(t0 - c0, t1 - c1)


def nelder_mead(
    objective: Callable[..., float],
    start: Sequence[float],
    config: SimplexConfig | None = None,
) -> NelderMeadResult:
    """Minimise ``objective`` by downhill simplex from ``start``.

    Stops when the simplex diameter drops below ``diameter_tol`` or the
    spread of vertex values below ``spread_tol``, or after
    ``max_iterations``.  The objective may return ``inf`` to reject a
    vertex (e.g. outside a search box), but must be finite at ``start``.
    """
    cfg = config or SimplexConfig()
    x0 = [float(v) for v in start]
    dim = len(x0)
    if dim < 1:
        raise DomainError("start point must have at least one coordinate")

    evals = 0

    def f(x):
        nonlocal evals
        evals += 1
        return float(objective(*x))

    f0 = f(x0)
    if not math.isfinite(f0):
        raise DomainError(f"objective is not finite at start {tuple(x0)}: {f0!r}")

    steps = list(cfg.initial_step)
    if len(steps) < dim:
        steps = steps + [0.1] * (dim - len(steps))
    simplex = [(x0, f0)]
    for i in range(dim):
        x = list(x0)
        x[i] += steps[i]
        simplex.append((x, f(x)))

    iterations = 0

    def converged() -> bool:
        best_x, best_f = simplex[0]
        worst_f = simplex[-1][1]
        if math.isfinite(worst_f) and worst_f - best_f < cfg.spread_tol:
            return True
        diameter = max(
            abs(v[k] - best_x[k]) for v, _ in simplex[1:] for k in range(dim)
        )
        return diameter < cfg.diameter_tol

    simplex.sort(key=lambda vf: vf[1])
    while not converged() and iterations < cfg.max_iterations:
        iterations += 1
        best = simplex[0]
        second_worst_f = simplex[-2][1]
        worst = simplex[-1]
        centroid = [
            math.fsum(v[k] for v, _ in simplex[:-1]) / dim for k in range(dim)
        ]

        reflected = [centroid[k] + cfg.reflect * (centroid[k] - worst[0][k]) for k in range(dim)]
        f_r = f(reflected)
        if best[1] <= f_r < second_worst_f:
            simplex[-1] = (reflected, f_r)
        elif f_r < best[1]:
            expanded = [centroid[k] + cfg.expand * (centroid[k] - worst[0][k]) for k in range(dim)]
            f_e = f(expanded)
            simplex[-1] = (expanded, f_e) if f_e < f_r else (reflected, f_r)
        else:
            if f_r < worst[1]:
                contracted = [centroid[k] + cfg.contract * (reflected[k] - centroid[k]) for k in range(dim)]
            else:
                contracted = [centroid[k] + cfg.contract * (worst[0][k] - centroid[k]) for k in range(dim)]
            f_c = f(contracted)
            if f_c < min(f_r, worst[1]):
                simplex[-1] = (contracted, f_c)
            else:
                # shrink toward the best vertex
                base = best[0]
                simplex = [best] + [
                    (
                        [base[k] + cfg.shrink * (v[k] - base[k]) for k in range(dim)],
                        None,
                    )
                    for v, _ in simplex[1:]
                ]
                simplex = [(v, fv if fv is not None else f(v)) for v, fv in simplex]
        simplex.sort(key=lambda vf: vf[1])

    best_x, best_f = simplex[0]
    return NelderMeadResult(x=tuple(best_x), value=best_f, iterations=iterations, evals=evals)


def _moment_objective(target: tuple[float, float]) -> Callable[[float, float], float]:
    """Distance-to-target over (mu, log sigma), +inf outside the search box."""
    t_mean, t_std = target
    mu_lo, mu_hi = MU_BOUNDS
    log_sig_lo = math.log(SIGMA_BOUNDS[0])
    log_sig_hi = math.log(SIGMA_BOUNDS[1])

    def objective(mu: float, log_sigma: float) -> float:
        if not (mu_lo <= mu <= mu_hi) or not (log_sig_lo <= log_sigma <= log_sig_hi):
            return math.inf
        try:
            mean, std = truncated_moments(mu, math.exp(log_sigma))
        except ArithmeticError:
            return math.inf
        return math.hypot(t_mean - mean, t_std - std)

    return objective


def _search(point: DecisionPoint, epsilon: float, config: SimplexConfig) -> tuple[tuple[float, float], float, int, int]:
    """Run the simplex search (plus the stall-guard restart); alpha <= 0.5 here."""
    target = target_moments(point)
    objective = _moment_objective(target)
    sigma0 = max(target[1], 1e-4)

    if point.alpha == 0.5:
        # the landscape is exactly symmetric in mu, so the optimum has
        # mu = 0.5; searching only log sigma keeps that symmetry exact
        pinned = lambda log_sigma: objective(0.5, log_sigma)
        cfg1d = replace(config, initial_step=(config.initial_step[-1],))
        res = nelder_mead(pinned, (math.log(sigma0),), cfg1d)
        best = ((0.5, res.x[0]), res.value, res.iterations, res.evals)
        if res.value >= epsilon and is_feasible_parabola(point, slack=0.0):
            retry = nelder_mead(pinned, (math.log(0.15),), cfg1d)
            if retry.value < res.value:
                best = ((0.5, retry.x[0]), retry.value, res.iterations + retry.iterations,
                        res.evals + retry.evals)
        return best

    res = nelder_mead(objective, (point.alpha, math.log(sigma0)), config)
    best = (res.x, res.value, res.iterations, res.evals)
    if res.value >= epsilon and is_feasible_parabola(point, slack=0.0):
        retry = nelder_mead(objective, (0.5, math.log(0.15)), config)
        if retry.value < res.value:
            best = (retry.x, retry.value, res.iterations + retry.iterations,
                    res.evals + retry.evals)
    return best


def calibrate(
    point: DecisionPoint,
    epsilon: float = DEFAULT_EPSILON,
    config: SimplexConfig | None = None,
) -> CalibrationResult:
    """Find the parent normal whose truncated moments best match ``point``.

    Sigma is searched in log space to enforce positivity.  Points with
    ``alpha > 0.5`` are solved on the mirrored problem and reflected back,
    which makes the accept/reject decision and the realised moments exactly
    symmetric in alpha.  The result is returned even when rejected
    (``accepted=False``) so callers can report the achieved distance.
    """
    if not (epsilon > 0.0):
        raise DomainError(f"epsilon must be > 0, got {epsilon!r}")
    if point.alpha > 0.5:
        return calibrate(point.mirrored(), epsilon, config).reflected()

    cfg = config or SimplexConfig()
    (mu, log_sigma), _, iterations, evals = _search(point, epsilon, cfg)
    spec = TruncNormSpec.from_parent(mu, math.exp(log_sigma))
    d = distance(target_moments(point), (spec.mu_w, spec.sigma_w))
    return CalibrationResult(
        point=point,
        spec=spec,
        distance=d,
        accepted=d < epsilon,
        iterations=iterations,
        function_evals=evals,
    )


def is_feasible_parabola(point: DecisionPoint, slack: float = 0.02) -> bool:
    """Fast feasibility pre-check against ``delta <= 4*alpha*(1-alpha) + slack``.

    A UI affordance and stall guard only; the calibration distance is the
    authoritative accept/reject decision.
    """
    if slack < 0.0:
        raise DomainError(f"slack must be >= 0, got {slack!r}")
    return point.delta <= 4.0 * point.alpha * (1.0 - point.alpha) + slack
