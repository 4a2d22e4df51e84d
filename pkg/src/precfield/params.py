"""Coefficients of the precision operator and their validity conditions.

The model couples field values through the operator

    theta0 - theta1 * Lap + theta2 * Lap^2

where ``Lap`` is the d-dimensional Laplacian.  The coefficient triple
theta = (theta0, theta1, theta2) defines a valid Gaussian model only in
one of two regimes:

    C1: theta0 > 0, theta1 > 0, theta2 > 0
    C2: theta0 > 0, theta2 > 0, theta1 < 0 and theta1**2 < 4*theta0*theta2

Both regimes keep the characteristic polynomial
``p(z) = theta0 + theta1*z + theta2*z**2`` strictly positive for z >= 0,
which is what positive-definiteness of the model rests on.
"""

import enum
import math
from dataclasses import dataclass

from .errors import (
    DiscriminantViolation,
    NonPositiveTheta0,
    NonPositiveTheta2,
    NonPositiveXi,
    PrecfieldError,
    ZeroTheta1,
)


class Regime(enum.Enum):
    """Which positivity condition the coefficient triple satisfies."""

    C1 = "C1"
    C2 = "C2"


@dataclass(frozen=True)
class ThetaParams:
    """Validated coefficient triple with its regime tag.

    Instances are immutable; construct through :func:`validate_theta`
    (or :func:`matern_theta`) so the regime tag is always consistent
    with the values.
    """

    theta0: float
    theta1: float
    theta2: float
    regime: Regime

    def astuple(self):
        return (self.theta0, self.theta1, self.theta2)


def validate_theta(theta0: float, theta1: float, theta2: float) -> ThetaParams:
    """Check (theta0, theta1, theta2) against C1/C2 and tag the regime.

    Raises
    ------
    NonPositiveTheta0, NonPositiveTheta2
        Required strictly positive in both regimes.
    ZeroTheta1
        theta1 = 0 lies in neither regime and is rejected.
    DiscriminantViolation
        theta1 < 0 but theta1**2 >= 4*theta0*theta2.

    The discriminant comparison is exact (no tolerance): the conditions
    are strict inequalities and borderline triples are the caller's
    responsibility.
    """
    theta0, theta1, theta2 = float(theta0), float(theta1), float(theta2)
    for name, value in (("theta0", theta0), ("theta1", theta1), ("theta2", theta2)):
        if not math.isfinite(value):
            raise PrecfieldError(f"{name} must be finite, got {value}")
    if theta0 <= 0:
        raise NonPositiveTheta0(f"theta0 must be > 0, got {theta0}")
    if theta2 <= 0:
        raise NonPositiveTheta2(f"theta2 must be > 0, got {theta2}")
    if theta1 == 0:
        raise ZeroTheta1("theta1 = 0 satisfies neither C1 nor C2")
    if theta1 > 0:
        return ThetaParams(theta0, theta1, theta2, Regime.C1)
    if theta1 * theta1 >= 4.0 * theta0 * theta2:
        raise DiscriminantViolation(
            f"theta1 < 0 requires theta1**2 < 4*theta0*theta2 "
            f"({theta1 * theta1} >= {4.0 * theta0 * theta2})"
        )
    return ThetaParams(theta0, theta1, theta2, Regime.C2)


def matern_theta(xi: float) -> ThetaParams:
    """Coefficient triple whose zero-bandwidth limit is Matern nu=1.

    Returns ``(1, 2*xi**2, xi**4) / (4*pi*xi**2)``, i.e. the triple for
    which ``1/(theta0 + theta1*k**2 + theta2*k**4)`` equals the Matern
    nu=1 spectral density ``4*pi*xi**2 / (1 + k**2*xi**2)**2`` with
    correlation length ``xi``.  Always regime C1.
    """
    xi = float(xi)
    if not xi > 0:
        raise NonPositiveXi(f"xi must be > 0, got {xi}")
    scale = 1.0 / (4.0 * math.pi * xi * xi)
    return validate_theta(scale, scale * 2.0 * xi * xi, scale * xi ** 4)


def characteristic_poly(params: ThetaParams, z) -> float:
    """Evaluate ``theta0 + theta1*z + theta2*z**2``.

    Strictly positive for every z >= 0 when *params* passed validation.
    Accepts scalars or numpy arrays.
    """
    return params.theta0 + z * (params.theta1 + z * params.theta2)
