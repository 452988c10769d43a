"""Eigenproblem of a particle bouncing on a mirror in a linear potential.

A mass m in the field m*g*z above a perfect mirror at z = 0 has the natural
length z0 = (hbar^2/(2 m^2 g))^(1/3) and energy E0 = m*g*z0.  The n-th bound
state has energy E0*lam_n, where -lam_n is the n-th zero of Ai, and its
wavefunction is C_n * Ai(z/z0 - lam_n) above the mirror, zero below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .airy import airy_ai, airy_ai_prime, airy_zero
from .constants import PhysicalConstants


@dataclass(frozen=True)
class BouncerScales:
    """Characteristic length z0 (m) and energy e0 (J) of the bouncer."""

    z0: float
    e0: float


@dataclass(frozen=True)
class EigenState:
    """Bound state n: Airy zero magnitude, energy (J), normalization (m^-1/2)."""

    n: int
    lam: float
    energy: float
    norm_const: float


def scales(constants: PhysicalConstants) -> BouncerScales:
    """Characteristic scales from the physical constants."""
    z0 = (constants.hbar**2 / (2.0 * constants.m**2 * constants.g)) ** (1.0 / 3.0)
    return BouncerScales(z0=z0, e0=constants.m * constants.g * z0)


def eigenstate(n: int, bouncer_scales: BouncerScales) -> EigenState:
    """The n-th bound state (n >= 1).

    The normalization constant is the closed form 1/(sqrt(z0)*|Ai'(-lam_n)|),
    which the test suite cross-checks against direct quadrature of psi^2.
    """
    lam = airy_zero(n).lam
    norm = 1.0 / (math.sqrt(bouncer_scales.z0) * abs(airy_ai_prime(-lam)))
    return EigenState(n=n, lam=lam, energy=bouncer_scales.e0 * lam, norm_const=norm)


def wavefunction(state: EigenState, bouncer_scales: BouncerScales, z: float) -> float:
    """psi_n(z) in m^(-1/2); zero at and below the mirror."""
    if z <= 0.0:
        return 0.0
    return state.norm_const * airy_ai(z / bouncer_scales.z0 - state.lam)
