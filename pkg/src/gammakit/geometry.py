"""Pointwise geometry of the symmetrized bidisc.

The closed symmetrized bidisc is the image of the closed bidisc under
(z, w) -> (z + w, z w). Membership of a point (s, p), its boundary and its
distinguished boundary all reduce to explicit inequalities in s and p; the
distinguished boundary is a closed Moebius band charted by a flat coordinate
pair (x, theta).
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from .errors import NotOnTorusFiber
from .tolerances import DEFAULT_TOL, ToleranceConfig


class GammaRegion(Enum):
    """Location of a point relative to the closed symmetrized bidisc."""

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    DISTINGUISHED_BOUNDARY = "distinguished-boundary"
    OUTSIDE = "outside"


def symmetrize(z: complex, w: complex) -> tuple[complex, complex]:
    """Map a bidisc point to (z + w, z w)."""
    return z + w, z * w


def classify_point(
    s: complex, p: complex, tol: ToleranceConfig = DEFAULT_TOL
) -> GammaRegion:
    """Classify (s, p) with ``eps_residual`` slack on each defining inequality.

    Membership: |s| <= 2 and |s - conj(s) p| <= 1 - |p|^2. The boundary is
    the equality case of the second condition; the distinguished boundary
    additionally has |p| = 1 and s = conj(s) p. Ties resolve to the most
    specific region.
    """
    s = complex(s)
    p = complex(p)
    eps = tol.eps_residual
    twist = abs(s - s.conjugate() * p)
    room = 1.0 - abs(p) ** 2

    if abs(s) > 2.0 + eps or twist > room + eps:
        return GammaRegion.OUTSIDE
    if abs(abs(p) - 1.0) <= eps and twist <= eps:
        return GammaRegion.DISTINGUISHED_BOUNDARY
    if abs(twist - room) <= eps:
        return GammaRegion.BOUNDARY
    return GammaRegion.INTERIOR


def royal_residual(s: complex, p: complex) -> complex:
    """s^2 - 4p; zero exactly on the royal variety."""
    return complex(s) ** 2 - 4.0 * complex(p)


def mobius_chart(
    s: complex,
    p: complex,
    branch_ref: float = 0.0,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> tuple[float, float]:
    """Flat coordinates (x, theta) of a distinguished-boundary point.

    theta is the branch of -i log p nearest ``branch_ref``, so a caller
    walking along a curve keeps theta continuous by chaining each returned
    theta into the next call. x = Re(s e^{-i theta/2}) / 2 lies in [-1, 1]
    for genuine distinguished-boundary points; the product s e^{-i theta/2}
    is real there because s = conj(s) p.
    """
    s = complex(s)
    p = complex(p)
    if abs(abs(p) - 1.0) > tol.eps_circle:
        raise NotOnTorusFiber(f"|p| = {abs(p):.6g}; the chart needs |p| = 1")
    principal = cmath.phase(p)
    theta = principal + 2.0 * math.pi * round((branch_ref - principal) / (2.0 * math.pi))
    x = 0.5 * (s * cmath.exp(-0.5j * theta)).real
    return x, theta
