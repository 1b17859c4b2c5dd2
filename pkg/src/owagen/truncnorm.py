"""Normal distribution truncated to [0, 1]: density and post-truncation moments.

A parent normal N(mu, sigma) restricted to [0, 1] and renormalised has a
mean ``mu_w`` in [0, 1] and a standard deviation ``sigma_w`` bounded above
by ``1/(2*sqrt(3))``, the standard deviation of the uniform distribution on
[0, 1].  Closed forms for both moments are implemented here together with a
slow adaptive-quadrature oracle used for validation.

Numerical notes
---------------
The normalising constant ``Z = Phi(b) - Phi(a)`` with ``a = -mu/sigma`` and
``b = (1-mu)/sigma`` is evaluated in one of two cancellation-safe forms
after reflecting ``mu > 0.5`` problems onto ``1 - mu``:

* ``a`` below the erf saturation zone: a plain erf difference, whose error
  scales with the function value, keeps full relative precision (arguments
  straddling zero even add their magnitudes).
* ``a`` deep in the tail: both erf values would round to 1; the difference
  is formed from scaled complementary error functions (``erfcx``) so the
  common exponential factor cancels instead of underflowing.

The reflection also makes the symmetry ``mean(mu) + mean(1-mu) = 1`` exact
in floating point, which downstream symmetry guarantees rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate
from scipy.special import erfcx

from .errors import DomainError, NumericalError, UnderflowError

__all__ = [
    "SIGMA_W_MAX",
    "TruncNormSpec",
    "pdf",
    "truncated_mean",
    "truncated_std",
    "truncated_moments",
    "oracle_moments",
]

#: Upper bound on the truncated standard deviation: std of U[0, 1].
SIGMA_W_MAX = 0.5 / math.sqrt(3.0)

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_UNDERFLOW_FLOOR = 1e-300
_RADICAND_TOL = -1e-12
# below this standardised tail argument, plain erf differences are exact
# enough; above it they saturate and the erfcx form takes over
_ERF_SAFE_LIMIT = 2.0


def _phi(z: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * z * z)


def _moments_left(mu: float, sigma: float) -> tuple[float, float]:
    """Moments for mu <= 0.5; callers reflect first."""
    a = (0.0 - mu) / sigma
    b = (1.0 - mu) / sigma
    if a < _ERF_SAFE_LIMIT:
        # erf is far from saturation: its error scales with the value, so
        # the difference keeps full relative precision (arguments that
        # straddle zero even add their magnitudes)
        z_norm = 0.5 * (math.erf(b / _SQRT2) - math.erf(a / _SQRT2))
        if z_norm < _UNDERFLOW_FLOOR:
            raise UnderflowError(
                f"normal(mu={mu:g}, sigma={sigma:g}) has negligible mass on [0, 1]"
            )
        pa = _phi(a)
        pb = _phi(b)
        # pa - pb via expm1 keeps relative precision when a^2 ~ b^2
        pdiff = -pa * math.expm1(0.5 * (a - b) * (a + b))
        rdiff = pdiff / z_norm
        bracket = 1.0 + (a * pa - b * pb) / z_norm - rdiff * rdiff
    else:
        # deep in the upper tail (a >= 2, so mu well below 0): erf would
        # saturate and cancel; use the scaled complementary form instead
        u = a / _SQRT2
        v = b / _SQRT2
        scale = math.exp((u - v) * (u + v))  # exp(u^2 - v^2) <= 1
        denom = erfcx(u) - erfcx(v) * scale
        z_norm = 0.5 * math.exp(-u * u) * denom if u * u < 745.0 else 0.0
        if z_norm < _UNDERFLOW_FLOOR:
            raise UnderflowError(
                f"normal(mu={mu:g}, sigma={sigma:g}) has negligible mass on [0, 1]"
            )
        two_over = 2.0 * _INV_SQRT_2PI
        ra = two_over / denom
        rb = two_over * scale / denom
        rdiff = ra - rb
        bracket = 1.0 + (a * ra - b * rb) - rdiff * rdiff
    mean = mu + sigma * rdiff
    if bracket < 0.0:
        if bracket < _RADICAND_TOL:
            raise NumericalError(
                f"variance radicand {bracket:.3g} below tolerance at "
                f"mu={mu:g}, sigma={sigma:g}"
            )
        bracket = 0.0
    return mean, sigma * math.sqrt(bracket)


def truncated_moments(mu: float, sigma: float) -> tuple[float, float]:
    """(mean, std) of N(mu, sigma) truncated to [0, 1].

    Raises :class:`UnderflowError` when the parent distribution has less
    than ~1e-300 of its mass on [0, 1].
    """
    if not (sigma > 0.0) or not math.isfinite(sigma) or not math.isfinite(mu):
        raise DomainError(f"need finite mu and sigma > 0, got mu={mu!r}, sigma={sigma!r}")
    if mu > 0.5:
        mean, std = _moments_left(1.0 - mu, sigma)
        return 1.0 - mean, std
    return _moments_left(mu, sigma)


def truncated_mean(mu: float, sigma: float) -> float:
    """Mean of N(mu, sigma) truncated to [0, 1]; always in [0, 1]."""
    return truncated_moments(mu, sigma)[0]


def truncated_std(mu: float, sigma: float) -> float:
    """Standard deviation of N(mu, sigma) truncated to [0, 1].

    Strictly below ``SIGMA_W_MAX`` for finite sigma; approaches it as
    sigma grows with mu = 0.5.
    """
    return truncated_moments(mu, sigma)[1]


def _normalizer(mu: float, sigma: float) -> float:
    """Z = Phi((1-mu)/sigma) - Phi(-mu/sigma), cancellation-safe."""
    if mu > 0.5:
        mu = 1.0 - mu
    a = (0.0 - mu) / sigma
    b = (1.0 - mu) / sigma
    if a < _ERF_SAFE_LIMIT:
        return 0.5 * (math.erf(b / _SQRT2) - math.erf(a / _SQRT2))
    u = a / _SQRT2
    v = b / _SQRT2
    if u * u >= 745.0:
        return 0.0
    return 0.5 * math.exp(-u * u) * (erfcx(u) - erfcx(v) * math.exp((u - v) * (u + v)))


@dataclass(frozen=True)
class TruncNormSpec:
    """Parent parameters plus the realised moments after truncation to [0, 1].

    The stored ``(mu_w, sigma_w)`` must agree with the closed forms for
    ``(mu, sigma)`` within 1e-10; use :meth:`from_parent` to construct.
    """

    mu: float
    sigma: float
    mu_w: float
    sigma_w: float

    def __post_init__(self):
        for name in ("mu", "sigma", "mu_w", "sigma_w"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (self.sigma > 0.0):
            raise DomainError(f"sigma must be > 0, got {self.sigma!r}")
        if not 0.0 <= self.mu_w <= 1.0:
            raise DomainError(f"mu_w must be in [0, 1], got {self.mu_w!r}")
        if not 0.0 <= self.sigma_w <= SIGMA_W_MAX + 1e-12:
            raise DomainError(
                f"sigma_w must be in [0, {SIGMA_W_MAX:.10f}], got {self.sigma_w!r}"
            )
        mean, std = truncated_moments(self.mu, self.sigma)
        if abs(mean - self.mu_w) > 1e-10 or abs(std - self.sigma_w) > 1e-10:
            raise DomainError(
                f"moments ({self.mu_w!r}, {self.sigma_w!r}) inconsistent with "
                f"parent (mu={self.mu!r}, sigma={self.sigma!r})"
            )

    @classmethod
    def from_parent(cls, mu: float, sigma: float) -> "TruncNormSpec":
        mean, std = truncated_moments(mu, sigma)
        return cls(mu=mu, sigma=sigma, mu_w=mean, sigma_w=std)

    def reflected(self) -> "TruncNormSpec":
        """The spec mirrored about x = 0.5."""
        return TruncNormSpec(
            mu=1.0 - self.mu, sigma=self.sigma,
            mu_w=1.0 - self.mu_w, sigma_w=self.sigma_w,
        )


def pdf(spec: TruncNormSpec, x: float) -> float:
    """Density of the truncated distribution at ``x``; 0 outside [0, 1].

    Raises :class:`UnderflowError` when the normalising denominator of the
    parent falls below 1e-300.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    denom = spec.sigma * _normalizer(spec.mu, spec.sigma)
    if denom < _UNDERFLOW_FLOOR:
        raise UnderflowError(
            f"normalisation denominator underflows for mu={spec.mu:g}, "
            f"sigma={spec.sigma:g}"
        )
    if x < 0.0 or x > 1.0:
        return 0.0
    return _phi((x - spec.mu) / spec.sigma) / denom


def _piecewise_quad(f, breakpoints) -> float:
    total = 0.0
    for lo, hi in zip(breakpoints[:-1], breakpoints[1:]):
        if hi <= lo:
            continue
        # epsabs=0: tiny-mass integrands must converge in relative terms,
        # otherwise the moment ratios lose all precision
        value, abserr = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=1e-12, limit=300)
        if not math.isfinite(value):
            raise NumericalError(f"quadrature diverged on [{lo:g}, {hi:g}]")
        total += value
    return total


def oracle_moments(mu: float, sigma: float) -> tuple[float, float]:
    """(mean, std) by adaptive quadrature of the unnormalised density.

    Slow but independent of the closed forms: the normalisation, mean and
    variance are all integrals of ``exp(-((x-mu)/sigma)^2 / 2)`` over [0, 1],
    subdivided near the parent mean so the quadrature resolves narrow peaks.
    Intended for tests and validation runs only.
    """
    if not (sigma > 0.0) or not math.isfinite(sigma) or not math.isfinite(mu):
        raise DomainError(f"need finite mu and sigma > 0, got mu={mu!r}, sigma={sigma!r}")

    def kernel(x: float) -> float:
        z = (x - mu) / sigma
        return math.exp(-0.5 * z * z) if z * z < 1490.0 else 0.0

    cuts = sorted({0.0, 1.0} | {
        min(1.0, max(0.0, mu + k * sigma)) for k in (-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0)
    })
    mass = _piecewise_quad(kernel, cuts)
    if mass < _UNDERFLOW_FLOOR:
        raise UnderflowError(
            f"normal(mu={mu:g}, sigma={sigma:g}) has negligible mass on [0, 1]"
        )
    mean = _piecewise_quad(lambda x: x * kernel(x), cuts) / mass
    var = _piecewise_quad(lambda x: (x - mean) ** 2 * kernel(x), cuts) / mass
    return mean, math.sqrt(var)
