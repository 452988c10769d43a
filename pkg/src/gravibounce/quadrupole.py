"""Matrix elements <k|z^2|n> of the bouncer, by two independent routes.

The closed form for k != n is 24*(-1)^(k-n+1)/(lam_k - lam_n)^4 in units of
z0^2.  The quadrature route integrates psi_k * z^p * psi_n directly and is
used both as the cross-validation oracle for the closed form and as the only
route for diagonal elements, where the closed form does not apply.
"""

from __future__ import annotations

from dataclasses import dataclass

from .airy import airy_ai, airy_ai_prime, airy_zero
from .bouncer import BouncerScales
from .constants import PhysicalConstants
from .exceptions import DomainError
from .quadrature import integrate

# Integration runs in mirror units (x = z/z0).  Past the outer classical
# turning point Ai decays like exp(-(2/3)x^(3/2)); 15 extra units put the
# truncated tail below 1e-16 of the integral.
_TAIL_UNITS = 15.0
_PANEL_UNITS = 0.75  # initial panel width, a fraction of the Airy wavelength


@dataclass(frozen=True)
class QuadrupoleElement:
    """<k|z^2|n> in mirror units (dimensionless), SI (m^2), and as the
    transition quadrupole moment m*<k|z^2|n> (kg m^2)."""

    k: int
    n: int
    dimensionless: float
    physical: float
    q_moment: float


def _check_index(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DomainError(f"state index {name} must be an integer >= 1, got {value!r}")


def z_power_moment(k: int, n: int, bouncer_scales: BouncerScales, power: int = 2) -> float:
    """<k|z^power|n> in SI units (m^power) by adaptive quadrature.

    Indices up to 200 are supported; the integration domain grows with the
    larger turning point.  The achieved error estimate is held below
    max(1e-10*|result|, 1e-14) in mirror units, else ConvergenceError.
    """
    _check_index("k", k)
    _check_index("n", n)
    if k > 200 or n > 200:
        raise DomainError(f"quadrature route supports indices <= 200, got ({k}, {n})")
    if power < 0:
        raise DomainError(f"power must be >= 0, got {power}")
    lam_k = airy_zero(k).lam
    lam_n = airy_zero(n).lam
    norm = abs(airy_ai_prime(-lam_k)) * abs(airy_ai_prime(-lam_n))
    upper = max(lam_k, lam_n) + _TAIL_UNITS

    if power == 0:
        def integrand(x: float) -> float:
            return airy_ai(x - lam_k) * airy_ai(x - lam_n)
    else:
        def integrand(x: float) -> float:
            return x**power * airy_ai(x - lam_k) * airy_ai(x - lam_n)

    value, _ = integrate(
        integrand,
        0.0,
        upper,
        rel_tol=1e-10,
        abs_tol=1e-14 * norm,
        initial_panels=max(8, int(upper / _PANEL_UNITS)),
    )
    return (value / norm) * bouncer_scales.z0**power


def element_closed(
    k: int, n: int, bouncer_scales: BouncerScales, constants: PhysicalConstants
) -> QuadrupoleElement:
    """Off-diagonal <k|z^2|n> from the closed form in the Airy zeros."""
    _check_index("k", k)
    _check_index("n", n)
    if k == n:
        raise DomainError(
            f"the closed form diverges on the diagonal (k = n = {k}); "
            "use element_quadrature for diagonal elements"
        )
    gap = airy_zero(k).lam - airy_zero(n).lam
    sign = 1.0 if (k - n) % 2 else -1.0  # (-1)^(k-n+1)
    dimensionless = sign * 24.0 / gap**4
    physical = dimensionless * bouncer_scales.z0**2
    return QuadrupoleElement(
        k=k, n=n, dimensionless=dimensionless, physical=physical,
        q_moment=constants.m * physical,
    )


def element_quadrature(
    k: int, n: int, bouncer_scales: BouncerScales, constants: PhysicalConstants
) -> QuadrupoleElement:
    """<k|z^2|n> by direct integration; valid on and off the diagonal."""
    physical = z_power_moment(k, n, bouncer_scales, power=2)
    dimensionless = physical / bouncer_scales.z0**2
    return QuadrupoleElement(
        k=k, n=n, dimensionless=dimensionless, physical=physical,
        q_moment=constants.m * physical,
    )
