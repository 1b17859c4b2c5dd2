"""OWA aggregation and weight-vector property metrics.

An ordered weighted averaging (OWA) operator sorts the criteria values
ascending and takes the dot product with a weight vector, so each weight
attaches to a rank position rather than to a particular criterion.  Three
scalar properties characterise a weight vector:

* ``orness`` / ``andness`` -- how OR-like (risk-taking) or AND-like
  (risk-averse) the operator is,
* ``dispersion``          -- normalised Shannon entropy of the weights,
* ``tradeoff``            -- one minus the normalised distance to the
  uniform vector.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDimensionError, DimensionMismatchError, DomainError

__all__ = [
    "WeightVector",
    "CriteriaSet",
    "owa_aggregate",
    "orness",
    "andness",
    "dispersion",
    "tradeoff",
]

WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True)
class WeightVector:
    """An OWA weight vector: nonnegative entries summing to one.

    Inputs whose sum is off by more than ``WEIGHT_SUM_TOL`` are rejected
    rather than silently renormalised.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        ws = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        _check_weights(np.asarray(ws))

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        if n < 1:
            raise DomainError("n must be >= 1")
        return cls((1.0 / n,) * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights)

    def reversed(self) -> "WeightVector":
        return WeightVector(self.weights[::-1])


@dataclass(frozen=True)
class CriteriaSet:
    """A vector of real-valued criteria to aggregate (finite, length >= 1)."""

    values: tuple[float, ...]

    def __post_init__(self):
        vs = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vs)
        _check_criteria(np.asarray(vs))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)


def _check_weights(arr: np.ndarray) -> None:
    if arr.ndim != 1 or arr.size < 1:
        raise DomainError("weights must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError("weights must be finite")
    if np.any(arr < 0.0):
        raise DomainError("weights must be nonnegative")
    total = math.fsum(arr.tolist())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(f"weights must sum to 1 within {WEIGHT_SUM_TOL:g}, got {total!r}")


def _check_criteria(arr: np.ndarray) -> None:
    if arr.ndim != 1 or arr.size < 1:
        raise DomainError("criteria must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError("criteria must be finite")


def _as_weights(w) -> np.ndarray:
    if isinstance(w, WeightVector):
        return w.as_array()
    arr = np.asarray(w, dtype=float)
    _check_weights(arr)
    return arr


def _as_criteria(x) -> np.ndarray:
    if isinstance(x, CriteriaSet):
        return x.as_array()
    arr = np.asarray(x, dtype=float)
    _check_criteria(arr)
    return arr


def owa_aggregate(w, x) -> float:
    """Aggregate criteria ``x`` with order weights ``w``.

    Returns ``sum_i w_i * x_(i)`` where ``x_(i)`` is the i-th smallest
    criterion value, so the result always lies in ``[min(x), max(x)]``.
    Accepts n = 1 (returns the single criterion).
    """
    wa = _as_weights(w)
    xa = _as_criteria(x)
    if wa.size != xa.size:
        raise DimensionMismatchError(
            f"{wa.size} weights cannot aggregate {xa.size} criteria"
        )
    ordered = np.sort(xa, kind="stable")
    return math.fsum((wa * ordered).tolist())


def _require_n2(arr: np.ndarray, name: str) -> int:
    n = arr.size
    if n < 2:
        raise DegenerateDimensionError(f"{name} is undefined for n = 1")
    return n


def orness(w) -> float:
    """OR-likeness of ``w``: 0 for the minimum operator, 1 for the maximum.

    ``1 - (1/(n-1)) * sum_i w_i * (n-i)`` with 1-based index i.
    """
    return 1.0 - andness(w)


def andness(w) -> float:
    """AND-likeness of ``w``; complement of :func:`orness`."""
    wa = _as_weights(w)
    n = _require_n2(wa, "andness")
    ranks = np.arange(n - 1, -1, -1, dtype=float)  # n-i for i = 1..n
    return math.fsum((wa * ranks).tolist()) / (n - 1)


def dispersion(w) -> float:
    """Normalised entropy of ``w`` in [0, 1], with the 0*log(0) = 0 convention.

    Equals 1 exactly when the weights are uniform.
    """
    wa = _as_weights(w)
    n = _require_n2(wa, "dispersion")
    terms = [wi * math.log(wi) for wi in wa.tolist() if wi > 0.0]
    return -math.fsum(terms) / math.log(n) + 0.0  # +0.0 avoids returning -0.0


def tradeoff(w) -> float:
    """Trade-off level of ``w``: 1 minus the scaled distance to uniform weights.

    ``1 - sqrt(n * sum_i (w_i - 1/n)^2 / (n-1))``; 1 exactly for uniform
    weights and 0 for any one-hot vector.
    """
    wa = _as_weights(w)
    n = _require_n2(wa, "tradeoff")
    devs = [(wi - 1.0 / n) ** 2 for wi in wa.tolist()]
    return 1.0 - math.sqrt(n * math.fsum(devs) / (n - 1))
