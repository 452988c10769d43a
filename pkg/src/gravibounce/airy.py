"""The Airy function Ai, its derivative, and the negative zeros of Ai.

Three evaluation regimes, chosen so every branch stays well conditioned in
double precision:

* |x| <= 1.75   Maclaurin pair series with the Gamma(1/3), Gamma(2/3)
                prefactors.  Beyond this the pair cancels catastrophically
                (the amplification grows like exp(2*zeta) for x > 0), so the
                series is not pushed further.
* |x| < 9.25    Taylor continuation from precomputed anchor values at the
                integers, step |h| <= 0.5.  Anchors are exact to the last
                bit, so no error accumulates across the region.
* |x| >= 9.25   Asymptotic expansions truncated at the smallest term; the
                truncation floor exp(-2*zeta) is below 1e-16 there.  The
                oscillatory branch computes its phase zeta + pi/4 in
                double-double arithmetic so large arguments keep full
                precision.

Zeros are refined by Newton iteration seeded with the semiclassical estimate
(3*pi*(4n-1)/8)^(2/3), falling back to bisection if an iterate leaves the
bracket between adjacent seed midpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import ConvergenceError, DomainError

__all__ = ["AiryZero", "airy_ai", "airy_ai_prime", "airy_zero", "bs_zero"]

_SERIES_LIMIT = 1.75
_ASYMPTOTIC_LIMIT = 9.25
_SQRT_PI = math.sqrt(math.pi)
_EPS = 2.220446049250313e-16

# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3)
AI_AT_ZERO = 0.3550280538878172
AIP_AT_ZERO = -0.2588194037928068

# (Ai(a), Ai'(a)) at the Taylor anchors, correctly rounded doubles.
_ANCHORS = {
    -9: (-0.022133721547341403, -0.9756639809263316),
    -8: (-0.0527050503563862, 0.9355609381983065),
    -7: (0.18428083525050565, -0.7710081684101265),
    -6: (-0.3291451736298231, 0.3459354872813429),
    -5: (0.35076100902411433, 0.32719281855444315),
    -4: (-0.07026553294928951, -0.7906285753685813),
    -3: (-0.37881429367765806, 0.3145837692165988),
    -2: (0.22740742820168558, 0.618259020741691),
    2: (0.03492413042327438, -0.05309038443365363),
    3: (0.006591139357460719, -0.011912976705951319),
    4: (0.0009515638512048018, -0.001958640950204179),
    5: (0.00010834442813607442, -0.0002474138908684625),
    6: (9.947694360252889e-06, -2.4765200397034955e-05),
    7: (7.492128863997167e-07, -2.008150894738792e-06),
    8: (4.6922076160992316e-08, -1.3414392979067865e-07),
    9: (2.47116843087249e-09, -7.480641389658946e-09),
}

_TAYLOR_TERMS = 26


def _build_taylor_tables():
    # y'' = (a + h) y gives (j+1)(j+2) c_{j+2} = a c_j + c_{j-1}.
    value_rows = {}
    deriv_rows = {}
    for a, (ai, aip) in _ANCHORS.items():
        c = [ai, aip, 0.5 * a * ai]
        for j in range(1, _TAYLOR_TERMS - 2):
            c.append((a * c[j] + c[j - 1]) / ((j + 1) * (j + 2)))
        value_rows[a] = tuple(c)
        deriv_rows[a] = tuple((j + 1) * c[j + 1] for j in range(_TAYLOR_TERMS - 1))
    return value_rows, deriv_rows


_TAYLOR_VALUE, _TAYLOR_DERIV = _build_taylor_tables()


def _build_uv_tables(count=42):
    u = [1.0]
    v = [1.0]
    for k in range(1, count):
        uk = u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
        u.append(uk)
        v.append(uk * (6 * k + 1) / (1 - 6 * k))
    return tuple(u), tuple(v)


_U, _V = _build_uv_tables()

_SPLITTER = 134217729.0  # 2**27 + 1
_PI4_HI = 0.7853981633974483
_PI4_LO = 3.061616997868383e-17


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _zeta_dd(t, sqrt_t):
    """(2/3)*t^(3/2) as a hi/lo pair; the phase needs more than one double.

    sqrt_t carries a half-ulp rounding of its own, which would leak into the
    phase as ~t*ulp; the first-order correction r/(2*sqrt_t) removes it.
    """
    p2, e2 = _two_prod(sqrt_t, sqrt_t)
    residual = (t - p2) - e2
    correction = t * residual / (2.0 * sqrt_t)
    p, e = _two_prod(t, sqrt_t)
    hi = 2.0 * p / 3.0
    m, me = _two_prod(3.0, hi)
    lo = (((2.0 * p - m) - me) + 2.0 * (e + correction)) / 3.0
    return hi, lo


def _phase_sin_cos(zeta_hi, zeta_lo):
    """sin and cos of zeta + pi/4, first-order corrected for the tail."""
    s1, err = _two_sum(zeta_hi, _PI4_HI)
    tail = err + zeta_lo + _PI4_LO
    sa = math.sin(s1)
    ca = math.cos(s1)
    return sa + ca * tail, ca - sa * tail


def _pair_series(x):
    x3 = x * x * x
    f_term = 1.0
    g_term = x
    f = f_term
    g = g_term
    fp = 0.0
    gp = 1.0
    for k in range(1, 40):
        f_term *= x3 / ((3 * k) * (3 * k - 1))
        g_term *= x3 / ((3 * k + 1) * (3 * k))
        f += f_term
        g += g_term
        if x != 0.0:
            fp += f_term * (3 * k) / x
            gp += g_term * (3 * k + 1) / x
        if abs(f_term) + abs(g_term) < 1e-18 * (abs(f) + abs(g)):
            break
    return (AI_AT_ZERO * f + AIP_AT_ZERO * g, AI_AT_ZERO * fp + AIP_AT_ZERO * gp)


def _pair_taylor(x):
    a = round(x)
    h = x - a
    coeffs = _TAYLOR_VALUE[a]
    acc = coeffs[-1]
    for j in range(_TAYLOR_TERMS - 2, -1, -1):
        acc = acc * h + coeffs[j]
    dcoeffs = _TAYLOR_DERIV[a]
    dacc = dcoeffs[-1]
    for j in range(_TAYLOR_TERMS - 3, -1, -1):
        dacc = dacc * h + dcoeffs[j]
    return acc, dacc


def _pair_asymptotic_positive(x):
    sqrt_x = math.sqrt(x)
    zeta_hi, zeta_lo = _zeta_dd(x, sqrt_x)
    if zeta_hi > 745.0:  # exp underflows; Ai and Ai' are zero to double precision
        return 0.0, 0.0
    inv = 1.0 / zeta_hi
    su = 1.0
    sv = 1.0
    power = 1.0
    prev = math.inf
    for k in range(1, len(_U)):
        power *= inv
        tu = _U[k] * power
        if abs(tu) >= prev:
            break
        prev = abs(tu)
        if k & 1:
            su -= tu
            sv -= _V[k] * power
        else:
            su += tu
            sv += _V[k] * power
        if abs(tu) < 1e-18:
            break
    damp = math.exp(-zeta_hi) * (1.0 - zeta_lo)
    root4 = math.sqrt(sqrt_x)
    ai = 0.5 * damp * su / (_SQRT_PI * root4)
    aip = -0.5 * damp * sv * root4 / _SQRT_PI
    return ai, aip


def _pair_asymptotic_negative(x):
    t = -x
    sqrt_t = math.sqrt(t)
    zeta_hi, zeta_lo = _zeta_dd(t, sqrt_t)
    sin_p, cos_p = _phase_sin_cos(zeta_hi, zeta_lo)
    inv = 1.0 / zeta_hi
    inv2 = inv * inv
    p_sum = 1.0
    q_sum = _U[1] * inv
    r_sum = 1.0
    s_sum = _V[1] * inv
    even_power = 1.0
    prev = math.inf
    for k in range(1, 20):
        even_power *= inv2
        odd_power = even_power * inv
        tu = _U[2 * k] * even_power
        if abs(tu) >= prev:
            break
        prev = abs(tu)
        if k & 1:
            p_sum -= tu
            q_sum -= _U[2 * k + 1] * odd_power
            r_sum -= _V[2 * k] * even_power
            s_sum -= _V[2 * k + 1] * odd_power
        else:
            p_sum += tu
            q_sum += _U[2 * k + 1] * odd_power
            r_sum += _V[2 * k] * even_power
            s_sum += _V[2 * k + 1] * odd_power
        if abs(tu) < 1e-18:
            break
    root4 = math.sqrt(sqrt_t)
    ai = (sin_p * p_sum - cos_p * q_sum) / (_SQRT_PI * root4)
    aip = -(cos_p * r_sum + sin_p * s_sum) * root4 / _SQRT_PI
    return ai, aip


def _ai_pair(x):
    ax = abs(x)
    if ax <= _SERIES_LIMIT:
        return _pair_series(x)
    if ax < _ASYMPTOTIC_LIMIT:
        return _pair_taylor(x)
    if x > 0.0:
        return _pair_asymptotic_positive(x)
    return _pair_asymptotic_negative(x)


def _check_finite(x) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"Airy functions require a finite argument, got {x!r}")
    return x


def airy_ai(x) -> float:
    """Ai(x) for finite real x."""
    return _ai_pair(_check_finite(x))[0]


def airy_ai_prime(x) -> float:
    """Ai'(x) for finite real x."""
    return _ai_pair(_check_finite(x))[1]


@dataclass(frozen=True)
class AiryZero:
    """The n-th negative zero of Ai, stored as its magnitude lam > 0."""

    n: int
    lam: float


def bs_zero(n: int) -> float:
    """Semiclassical (Bohr-Sommerfeld) estimate (3*pi*(4n-1)/8)^(2/3) of lam_n."""
    if n < 1:
        raise DomainError(f"zero index must be >= 1, got {n}")
    return (3.0 * math.pi * (4.0 * n - 1.0) / 8.0) ** (2.0 / 3.0)


def _bracket(n: int) -> tuple[float, float]:
    # lam_n sits just above its seed, far from the midpoints to the neighbours.
    seed = bs_zero(n)
    lo = 0.5 * (bs_zero(n - 1) + seed) if n > 1 else 1.5
    hi = 0.5 * (seed + bs_zero(n + 1))
    return lo, hi


def _bisect_zero(n: int, lo: float, hi: float) -> float:
    f_lo = _ai_pair(-lo)[0]
    f_hi = _ai_pair(-hi)[0]
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise ConvergenceError(
            f"no sign change bracketing Airy zero {n} in [{lo}, {hi}]", index=n, last=lo
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = _ai_pair(-mid)[0]
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=None)
def _refined_zero(n: int) -> float:
    lo, hi = _bracket(n)
    t = bs_zero(n)
    for _ in range(50):
        ai, aip = _ai_pair(-t)
        if aip == 0.0:
            return _bisect_zero(n, lo, hi)
        step = ai / aip  # Newton on g(t) = Ai(-t): t <- t + Ai(-t)/Ai'(-t)
        t_new = t + step
        if not lo < t_new < hi:
            return _bisect_zero(n, lo, hi)
        t = t_new
        if abs(step) <= max(1e-13, 8.0 * _EPS * t):
            return t
    raise ConvergenceError(
        f"Newton refinement of Airy zero {n} did not converge (last iterate {t!r})",
        index=n,
        last=t,
    )


def airy_zero(n: int) -> AiryZero:
    """The n-th negative zero of Ai (n >= 1), refined to machine accuracy.

    Results are cached, so repeated lookups are O(1).  Indices up to 10**6
    keep |Ai(-lam_n)| at the floating-point floor; far beyond that the
    spacing of doubles near lam_n dominates the achievable residual.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"zero index must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"zero index must be >= 1, got {n}")
    return AiryZero(n=n, lam=_refined_zero(n))
