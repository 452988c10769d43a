"""Spontaneous graviton emission rates for bouncer transitions.

Two routes are provided.  The general route takes an assembled quadrupole
moment Q and angular frequency omega; the reduced route evaluates the fully
substituted closed form, whose prefactor (512/5)*(m/M_Pl)^2*E0^5*z0^4*c/(hbar*c)^5
is about 5e-77 per second for a neutron in Earth gravity.  The two routes are
algebraically identical pair by pair, which the test suite enforces at 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .airy import airy_zero, bs_zero
from .bouncer import BouncerScales
from .constants import PhysicalConstants
from .exceptions import DomainError

# Quadrupole power coefficient of the general route.  Tied to the reduced
# closed form: (8/45) * 24^2 = 512/5, so the two routes agree identically.
_GENERAL_COEFF = 8.0 / 45.0
_REDUCED_COEFF = 512.0 / 5.0

#: Default reading of "ratio much less than one" for the quadrupole validity flag.
DEFAULT_VALIDITY_THRESHOLD = 0.1


@dataclass(frozen=True)
class TransitionRate:
    """Downward transition k -> n: frequency, rate, and quadrupole validity.

    ``quadrupole_ratio`` is omega*z_k/c with z_k the classical turning point
    z0*lam_k of the initial state; ``valid`` is ratio < threshold.
    """

    k: int
    n: int
    omega: float
    gamma: float
    quadrupole_ratio: float
    valid: bool


class RatePrefactor(NamedTuple):
    """Decomposition of the reduced-rate prefactor (s^-1)."""

    mass_ratio_sq: float  # (m/M_Pl)^2
    kinematic: float      # E0^5 * z0^4 * c / (hbar*c)^5, in s^-1
    value: float          # (512/5) * mass_ratio_sq * kinematic


def _check_index(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DomainError(f"state index {name} must be an integer >= 1, got {value!r}")


def omega(k: int, n: int, bouncer_scales: BouncerScales, constants: PhysicalConstants) -> float:
    """Angular frequency (E_k - E_n)/hbar in rad/s; positive for k > n."""
    _check_index("k", k)
    _check_index("n", n)
    if k == n:
        raise DomainError(f"transition k = n = {k} has zero frequency")
    gap = airy_zero(k).lam - airy_zero(n).lam
    return gap * bouncer_scales.e0 / constants.hbar


def rate_general(q_moment: float, omega_value: float, constants: PhysicalConstants) -> float:
    """Emission rate from an assembled quadrupole moment (kg m^2) and omega (rad/s)."""
    if not omega_value > 0.0:
        raise DomainError(
            f"spontaneous emission requires omega > 0, got {omega_value!r} "
            "(only downward transitions radiate)"
        )
    return (
        _GENERAL_COEFF
        * omega_value**5
        * q_moment**2
        / (constants.m_planck**2 * constants.c**4)
    )


def rate_prefactor(bouncer_scales: BouncerScales, constants: PhysicalConstants) -> RatePrefactor:
    """The reduced-rate prefactor and its (m/M_Pl)^2 x kinematic split."""
    mass_ratio_sq = (constants.m / constants.m_planck) ** 2
    hbar_c = constants.hbar * constants.c
    kinematic = bouncer_scales.e0**5 * bouncer_scales.z0**4 * constants.c / hbar_c**5
    return RatePrefactor(
        mass_ratio_sq=mass_ratio_sq,
        kinematic=kinematic,
        value=_REDUCED_COEFF * mass_ratio_sq * kinematic,
    )


def rate_reduced(
    k: int, n: int, bouncer_scales: BouncerScales, constants: PhysicalConstants
) -> float:
    """Emission rate k -> n (k > n) from the fully reduced closed form."""
    _check_index("k", k)
    _check_index("n", n)
    if k <= n:
        raise DomainError(f"reduced rate requires k > n, got k={k}, n={n}")
    gap = airy_zero(k).lam - airy_zero(n).lam
    return rate_prefactor(bouncer_scales, constants).value / gap**3


def quadrupole_validity(
    k: int,
    bouncer_scales: BouncerScales,
    constants: PhysicalConstants,
    threshold: float = DEFAULT_VALIDITY_THRESHOLD,
) -> tuple[float, bool]:
    """Worst-case quadrupole ratio omega_{k,1}*z0*lam_k/c for state k, and its flag.

    The largest available downward frequency (to the ground state) is paired
    with the classical turning point of state k, so the flag is conservative
    over all final states.
    """
    _check_index("k", k)
    lam_k = airy_zero(k).lam
    lam_1 = airy_zero(1).lam
    omega_k1 = (lam_k - lam_1) * bouncer_scales.e0 / constants.hbar
    ratio = omega_k1 * bouncer_scales.z0 * lam_k / constants.c
    return ratio, ratio < threshold


def validity_crossover_index(
    bouncer_scales: BouncerScales,
    constants: PhysicalConstants,
    threshold: float = 1.0,
) -> int:
    """Smallest k whose validity ratio reaches ``threshold``.

    The ratio grows like lam_k^2, so the crossover sits at k of order 1e7;
    the scan therefore uses the semiclassical zeros, whose relative error is
    far below the ratio's growth per index at that scale.
    """
    lam_1 = airy_zero(1).lam
    scale = bouncer_scales.e0 * bouncer_scales.z0 / (constants.hbar * constants.c)

    def ratio(k: int) -> float:
        lam_k = bs_zero(k)
        return (lam_k - lam_1) * lam_k * scale

    hi = 2
    while ratio(hi) < threshold:
        hi *= 2
        if hi > 2**60:
            raise DomainError("validity crossover exceeds the searchable index range")
    lo = max(1, hi // 2)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if ratio(mid) < threshold:
            lo = mid
        else:
            hi = mid
    return hi


def transition(
    k: int,
    n: int,
    bouncer_scales: BouncerScales,
    constants: PhysicalConstants,
    threshold: float = DEFAULT_VALIDITY_THRESHOLD,
) -> TransitionRate:
    """Assembled TransitionRate record for the downward transition k -> n."""
    _check_index("k", k)
    _check_index("n", n)
    if k <= n:
        raise DomainError(f"downward transition requires k > n, got k={k}, n={n}")
    omega_value = omega(k, n, bouncer_scales, constants)
    gamma = rate_reduced(k, n, bouncer_scales, constants)
    lam_k = airy_zero(k).lam
    ratio = omega_value * bouncer_scales.z0 * lam_k / constants.c
    return TransitionRate(
        k=k, n=n, omega=omega_value, gamma=gamma,
        quadrupole_ratio=ratio, valid=ratio < threshold,
    )


def lifetime(
    n: int,
    bouncer_scales: BouncerScales,
    constants: PhysicalConstants,
    threshold: float = DEFAULT_VALIDITY_THRESHOLD,
) -> tuple[float, list[TransitionRate]]:
    """Total decay rate of state n and its partial rates, sorted by final state.

    The ground state returns (0.0, []): there is nowhere to go.
    """
    _check_index("n", n)
    partials = [
        transition(n, final, bouncer_scales, constants, threshold=threshold)
        for final in range(1, n)
    ]
    total = math.fsum(p.gamma for p in partials)
    return total, partials
