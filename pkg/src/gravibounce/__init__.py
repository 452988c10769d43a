"""Gravitationally bound quantum states above a mirror: spectra, quadrupole
matrix elements, and spontaneous graviton emission rates."""

from .airy import AiryZero, airy_ai, airy_ai_prime, airy_zero, bs_zero
from .bouncer import BouncerScales, EigenState, eigenstate, scales, wavefunction
from .constants import PhysicalConstants, default_constants, dump_constants, load_constants
from .emission import (
    DEFAULT_VALIDITY_THRESHOLD,
    RatePrefactor,
    TransitionRate,
    lifetime,
    omega,
    quadrupole_validity,
    rate_general,
    rate_prefactor,
    rate_reduced,
    transition,
    validity_crossover_index,
)
from .exceptions import ConstantsError, ConvergenceError, DomainError, GravibounceError
from .quadrature import integrate
from .quadrupole import QuadrupoleElement, element_closed, element_quadrature, z_power_moment

__version__ = "0.1.0"

__all__ = [
    "AiryZero",
    "BouncerScales",
    "ConstantsError",
    "ConvergenceError",
    "DEFAULT_VALIDITY_THRESHOLD",
    "DomainError",
    "EigenState",
    "GravibounceError",
    "PhysicalConstants",
    "QuadrupoleElement",
    "RatePrefactor",
    "TransitionRate",
    "airy_ai",
    "airy_ai_prime",
    "airy_zero",
    "bs_zero",
    "default_constants",
    "dump_constants",
    "eigenstate",
    "element_closed",
    "element_quadrature",
    "integrate",
    "lifetime",
    "load_constants",
    "omega",
    "quadrupole_validity",
    "rate_general",
    "rate_prefactor",
    "rate_reduced",
    "scales",
    "transition",
    "validity_crossover_index",
    "wavefunction",
    "z_power_moment",
]
