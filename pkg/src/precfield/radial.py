"""Radial differential calculus in d dimensions.

For a radial function C(r), r = |s|, the d-dimensional Laplacian and
Bi-Laplacian reduce to ordinary derivatives in r:

    Lap C   = C'' + (d-1)/r * C'
    Lap^2 C = C'''' + 2(d-1)/r * C'''
              + ((d-1)^2 - 2(d-1))/r^2 * (C'' - C'/r)

Derivatives of the Gaussian profile exp(-r^2/2h^2) are expressed through
the probabilists' Hermite polynomials He_n, hard-coded here for the
orders 1..4 this package needs.
"""

import math
from dataclasses import dataclass

from .errors import NonPositiveRadius, UnsupportedOrder


def hermite(n: int, x: float) -> float:
    """Probabilists' Hermite polynomial He_n(x) for n in 1..4."""
    if n == 1:
        return x
    if n == 2:
        return x * x - 1.0
    if n == 3:
        return x * (x * x - 3.0)
    if n == 4:
        x2 = x * x
        return x2 * (x2 - 6.0) + 3.0
    raise UnsupportedOrder(f"Hermite order must be in 1..4, got {n}")


def gaussian_derivative(n: int, r: float, h: float) -> float:
    """n-th derivative of exp(-r^2/2h^2) with respect to r, n in 1..4.

    Uses the identity  d^n/dr^n exp(-r^2/2h^2)
    = (-1)^n / h^n * He_n(r/h) * exp(-r^2/2h^2).
    """
    if n not in (1, 2, 3, 4):
        raise UnsupportedOrder(f"derivative order must be in 1..4, got {n}")
    x = r / h
    sign = -1.0 if n % 2 else 1.0
    return sign * hermite(n, x) * math.exp(-0.5 * x * x) / h ** n


@dataclass(frozen=True)
class RadialDerivatives:
    """First through fourth radial derivatives of a radial function at one r."""

    d1: float
    d2: float
    d3: float
    d4: float


def radial_laplacian(derivs: RadialDerivatives, r: float, d: int) -> float:
    """d-dimensional Laplacian of a radial function from its derivatives at r > 0."""
    if not r > 0:
        raise NonPositiveRadius(f"radial Laplacian needs r > 0, got {r}")
    return derivs.d2 + (d - 1) * derivs.d1 / r


def radial_bilaplacian(derivs: RadialDerivatives, r: float, d: int) -> float:
    """d-dimensional Bi-Laplacian of a radial function from its derivatives at r > 0.

    The two 1/r^2 contributions can nearly cancel; for profiles with a
    known analytic continuation at r -> 0 prefer that closed form at
    very small r (see the Gaussian-specific methods in ``kernel``).
    """
    if not r > 0:
        raise NonPositiveRadius(f"radial Bi-Laplacian needs r > 0, got {r}")
    c = (d - 1) * (d - 1) - 2 * (d - 1)
    return (
        derivs.d4
        + 2.0 * (d - 1) * derivs.d3 / r
        + c / (r * r) * (derivs.d2 - derivs.d1 / r)
    )
