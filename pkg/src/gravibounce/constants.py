"""Physical constants in SI units, with file-based overrides.

The defaults reproduce the characteristic bouncer scales z0 = 5.87 um and
E0 = 0.60 peV for a neutron above a mirror; in particular g = 9.81 m/s^2
(not the standard-gravity 9.80665) is what those rounded values require.
Everything downstream works in SI; display units appear only at output
boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

from .exceptions import ConstantsError

_DEFAULTS = {
    "hbar": 1.054571817e-34,  # J s
    "c": 2.99792458e8,        # m/s
    "G": 6.67430e-11,         # m^3 kg^-1 s^-2
    "m": 1.67492750e-27,      # kg (neutron)
    "g": 9.81,                # m/s^2
}


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable SI inputs plus the derived Planck mass sqrt(hbar*c/G)."""

    hbar: float
    c: float
    G: float
    m: float
    g: float
    m_planck: float = field(init=False, repr=True, compare=False)

    def __post_init__(self):
        for f in fields(self):
            if f.name == "m_planck":
                continue
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
                raise ConstantsError(
                    f"constant {f.name!r} must be a positive finite number, got {value!r}",
                    key=f.name,
                )
        object.__setattr__(self, "m_planck", math.sqrt(self.hbar * self.c / self.G))
        if self.m >= self.m_planck:
            raise ConstantsError(
                f"constant 'm' ({self.m!r} kg) must be below the Planck mass "
                f"({self.m_planck!r} kg)",
                key="m",
            )


def default_constants() -> PhysicalConstants:
    """CODATA-style defaults (see module docstring for the g choice)."""
    return PhysicalConstants(**_DEFAULTS)


def load_constants(path) -> PhysicalConstants:
    """Read overrides from a ``key = value`` file; unspecified keys keep defaults.

    Format: UTF-8 text, one ``key = value`` pair per line, keys from
    {hbar, c, G, m, g}, values in SI, ``#`` starts a comment.  Unknown keys,
    malformed lines, and non-positive values raise ConstantsError.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConstantsError(f"cannot read constants file {path!r}: {exc}") from exc

    overrides: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConstantsError(
                f"malformed constants file {path!r}, line {lineno}: "
                f"expected 'key = value', got {raw.strip()!r}",
                line=lineno,
            )
        key, _, value_text = line.partition("=")
        key = key.strip()
        if key not in _DEFAULTS:
            raise ConstantsError(
                f"unknown constant {key!r} in {path!r}, line {lineno} "
                f"(expected one of {sorted(_DEFAULTS)})",
                line=lineno,
                key=key,
            )
        try:
            value = float(value_text.strip())
        except ValueError as exc:
            raise ConstantsError(
                f"malformed constants file {path!r}, line {lineno}: "
                f"cannot parse value {value_text.strip()!r} for {key!r}",
                line=lineno,
                key=key,
            ) from exc
        overrides[key] = value

    return PhysicalConstants(**{**_DEFAULTS, **overrides})


def dump_constants(constants: PhysicalConstants, path) -> None:
    """Write the five input constants so load_constants restores them bit-for-bit."""
    lines = [f"{name} = {getattr(constants, name)!r}\n" for name in _DEFAULTS]
    with open(path, "w", encoding="utf-8") as fh:
        fh.writelines(lines)
