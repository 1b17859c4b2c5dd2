"""Decision-space experiments: sampling, sweeps, frontier fit, sensitivity grids.

Everything here is reproducible: a seed fully determines the Latin
hypercube sample, and all derived outputs are deterministic functions of
the sample.  Sweep calibrations are independent, so they may run across
processes (``workers``), capped by the ``OWAGEN_THREADS`` environment
variable; results do not depend on the evaluation order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .calibrate import DEFAULT_EPSILON, CalibrationResult, DecisionPoint, calibrate
from .errors import DomainError, InsufficientDataError
from .generate import discretize
from .metrics import dispersion, orness, tradeoff

__all__ = [
    "SweepRecord",
    "SensitivityGrid",
    "FrontierFit",
    "GRID_METRICS",
    "latin_hypercube",
    "run_sweep",
    "epsilon_sweep",
    "fit_frontier",
    "sensitivity_grid",
    "write_sweep_csv",
    "write_epsilon_curve_csv",
    "write_grid_csv",
    "grid_csv_name",
]

GRID_METRICS = ("orness", "dispersion", "tradeoff")

_METRIC_FUNCS = {"orness": orness, "dispersion": dispersion, "tradeoff": tradeoff}


@dataclass(frozen=True)
class SweepRecord:
    """One sampled decision point with its calibration outcome."""

    point: DecisionPoint
    distance: float
    accepted: bool


@dataclass(frozen=True)
class FrontierFit:
    """Least-squares parabola ``delta = a*alpha^2 + b*alpha + c`` plus fit RMSE."""

    a: float
    b: float
    c: float
    rmse: float


@dataclass(frozen=True)
class SensitivityGrid:
    """One weight-property metric evaluated over an (alpha, delta) lattice.

    The lattice uses cell centres ``(k + 0.5)/resolution``, so every cell
    has an exact mirror cell and the degenerate ``delta = 0`` row never
    occurs.  ``values[i, j]`` belongs to ``(alphas[i], deltas[j])``;
    infeasible cells are NaN with ``feasible[i, j] = False``.
    """

    n: int
    metric: str
    alphas: np.ndarray
    deltas: np.ndarray
    values: np.ndarray
    feasible: np.ndarray


def latin_hypercube(n_samples: int, seed: int) -> list[DecisionPoint]:
    """Stratified random decision points: one per bin and dimension.

    Each of the ``n_samples`` equal-width bins of [0, 1] contains exactly
    one alpha and one delta coordinate.  Deterministic given ``seed``.
    """
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    rng = np.random.default_rng(seed)
    alphas = (rng.permutation(n_samples) + rng.random(n_samples)) / n_samples
    deltas = (rng.permutation(n_samples) + rng.random(n_samples)) / n_samples
    return [DecisionPoint(float(a), float(d)) for a, d in zip(alphas, deltas)]


@lru_cache(maxsize=1 << 18)
def _cached_calibration(alpha: float, delta: float, epsilon: float) -> CalibrationResult:
    return calibrate(DecisionPoint(alpha, delta), epsilon)


def _sweep_distance(task: tuple[float, float, float]) -> float:
    alpha, delta, epsilon = task
    return _cached_calibration(alpha, delta, epsilon).distance


def _resolve_workers(workers: int | None) -> int:
    limit = os.environ.get("OWAGEN_THREADS")
    cap = max(1, int(limit)) if limit else None
    if workers is None:
        workers = cap or 1
    if cap is not None:
        workers = min(workers, cap)
    return max(1, workers)


def _distances(
    points: Sequence[DecisionPoint], epsilon: float, workers: int | None
) -> list[float]:
    n_workers = _resolve_workers(workers)
    tasks = [(p.alpha, p.delta, epsilon) for p in points]
    if n_workers == 1 or len(points) < 64:
        return [_sweep_distance(t) for t in tasks]
    chunk = max(16, len(tasks) // (n_workers * 8))
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(_sweep_distance, tasks, chunksize=chunk))


def run_sweep(
    points: Sequence[DecisionPoint],
    epsilon: float = DEFAULT_EPSILON,
    workers: int | None = None,
) -> list[SweepRecord]:
    """Calibrate every point and record its distance and accept/reject flag."""
    dists = _distances(points, epsilon, workers)
    return [
        SweepRecord(point=p, distance=d, accepted=d < epsilon)
        for p, d in zip(points, dists)
    ]


def epsilon_sweep(
    points: Sequence[DecisionPoint],
    epsilons: Sequence[float],
    workers: int | None = None,
) -> list[tuple[float, float]]:
    """Fraction of points rejected (``distance >= eps``) for each threshold.

    Calibration distances are computed once and reused across thresholds,
    so the returned curve is necessarily non-increasing in eps.
    """
    eps = [float(e) for e in epsilons]
    if any(e <= 0.0 for e in eps):
        raise DomainError("epsilons must be positive")
    if any(b < a for a, b in zip(eps, eps[1:])):
        raise DomainError("epsilons must be sorted ascending")
    dists = np.asarray(_distances(points, DEFAULT_EPSILON, workers))
    return [(e, float(np.mean(dists >= e))) for e in eps]


def fit_frontier(records: Iterable[SweepRecord], n_bins: int = 25) -> FrontierFit:
    """Fit the acceptance frontier with a parabola.

    For each alpha bin, the accepted record with the largest delta marks
    the frontier; a least-squares quadratic through those points gives the
    coefficients.  Raises :class:`InsufficientDataError` with fewer than
    three nonempty bins.
    """
    best: dict[int, SweepRecord] = {}
    for rec in records:
        if not rec.accepted:
            continue
        k = min(int(rec.point.alpha * n_bins), n_bins - 1)
        cur = best.get(k)
        if cur is None or rec.point.delta > cur.point.delta:
            best[k] = rec
    if len(best) < 3:
        raise InsufficientDataError(
            f"frontier fit needs >= 3 nonempty alpha bins, got {len(best)}"
        )
    alphas = np.array([r.point.alpha for r in best.values()])
    deltas = np.array([r.point.delta for r in best.values()])
    coeffs = np.polyfit(alphas, deltas, 2)
    residuals = np.polyval(coeffs, alphas) - deltas
    rmse = float(np.sqrt(np.mean(residuals**2)))
    a, b, c = (float(v) for v in coeffs)
    return FrontierFit(a=a, b=b, c=c, rmse=rmse)


def sensitivity_grid(
    n: int,
    metric: str,
    resolution: int = 41,
    epsilon: float = DEFAULT_EPSILON,
) -> SensitivityGrid:
    """Evaluate one weight metric over a resolution x resolution lattice.

    Runs the generation pipeline per cell, with the calibration step
    cached so that repeated grids (other metrics, other n) share it.
    Cell centres never hit delta = 0, so the continuous path applies
    everywhere.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    if resolution < 10:
        raise DomainError(f"resolution must be >= 10, got {resolution!r}")
    if metric not in _METRIC_FUNCS:
        raise DomainError(f"metric must be one of {GRID_METRICS}, got {metric!r}")
    centers = (np.arange(resolution) + 0.5) / resolution
    values = np.full((resolution, resolution), np.nan)
    feasible = np.zeros((resolution, resolution), dtype=bool)
    metric_fn = _METRIC_FUNCS[metric]
    for i, alpha in enumerate(centers):
        for j, delta in enumerate(centers):
            result = _cached_calibration(float(alpha), float(delta), float(epsilon))
            if not result.accepted:
                continue
            weights = discretize(result.spec, n)
            values[i, j] = metric_fn(weights)
            feasible[i, j] = True
    return SensitivityGrid(
        n=n, metric=metric, alphas=centers.copy(), deltas=centers.copy(),
        values=values, feasible=feasible,
    )


def _fmt(value: float) -> str:
    return repr(float(value))


def write_sweep_csv(records: Sequence[SweepRecord], path) -> None:
    """``sweep.csv``: columns alpha, delta, distance, accepted."""
    lines = ["alpha,delta,distance,accepted"]
    for r in records:
        lines.append(
            f"{_fmt(r.point.alpha)},{_fmt(r.point.delta)},{_fmt(r.distance)},"
            f"{'true' if r.accepted else 'false'}"
        )
    _write_lines(path, lines)


def write_epsilon_curve_csv(curve: Sequence[tuple[float, float]], path) -> None:
    """``epsilon_curve.csv``: columns epsilon, rejected_fraction."""
    lines = ["epsilon,rejected_fraction"]
    for eps, frac in curve:
        lines.append(f"{_fmt(eps)},{_fmt(frac)}")
    _write_lines(path, lines)


def grid_csv_name(metric: str, n: int) -> str:
    return f"grid_{metric}_n{n}.csv"


def write_grid_csv(grid: SensitivityGrid, path) -> None:
    """``grid_<metric>_n<k>.csv``: columns alpha, delta, value, feasible."""
    lines = ["alpha,delta,value,feasible"]
    for i, alpha in enumerate(grid.alphas):
        for j, delta in enumerate(grid.deltas):
            lines.append(
                f"{_fmt(alpha)},{_fmt(delta)},{_fmt(grid.values[i, j])},"
                f"{'true' if grid.feasible[i, j] else 'false'}"
            )
    _write_lines(path, lines)


def _write_lines(path, lines: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
