"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Two vectors that must have equal length do not."""


class DegenerateDimensionError(ValueError):
    """A weight-vector metric was requested for n = 1, where it is undefined."""


class DomainError(ValueError):
    """An input is outside the mathematical domain (non-finite, negative, ...)."""


class UnderflowError(ArithmeticError):
    """The parent normal distribution has negligible mass on [0, 1]."""


class NumericalError(ArithmeticError):
    """A numerical routine failed to reach its accuracy contract."""


class InsufficientDataError(ValueError):
    """Not enough data points to perform a fit."""


class InfeasiblePointError(ValueError):
    """A requested (risk, trade-off) point admits no calibrated distribution.

    Carries the parabolic bound ``delta_max = 4*alpha*(1-alpha)`` and the
    best distance the calibration achieved before giving up.
    """

    def __init__(self, alpha: float, delta: float, delta_max: float, distance: float):
        self.alpha = alpha
        self.delta = delta
        self.delta_max = delta_max
        self.distance = distance
        super().__init__(
            f"no weight distribution exists for alpha={alpha:g}, delta={delta:g}: "
            f"requested trade-off exceeds delta_max = {delta_max:g} "
            f"(best calibration distance {distance:.3g})"
        )
