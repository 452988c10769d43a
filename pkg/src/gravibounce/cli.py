"""Command-line interface emitting level, matrix-element, rate, and lifetime
tables as CSV or JSON.

Exit status: 0 on success, 2 on usage or constants-file errors, 3 on
numerical failure.  Machine output uses 13 significant digits (the SI and
display-unit columns then stay mutually consistent to 1e-12); --pretty
renders a human table with display units (um, peV) instead.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import airy, bouncer, emission, quadrupole
from .constants import PhysicalConstants, default_constants, load_constants
from .exceptions import ConstantsError, ConvergenceError

J_PER_PEV = 1.602176634e-31  # pico-electronvolt in joules
M_PER_UM = 1e-6

_HEADERS = {
    "zeros": ["n", "lambda", "lambda_bs", "bs_rel_error"],
    "levels": ["n", "lambda", "energy_J", "energy_peV", "norm_const_per_sqrt_m"],
    "qmatrix": ["k", "n", "elem_closed", "elem_quadrature", "rel_diff"],
    "rates": ["k", "n", "omega_rad_per_s", "gamma_per_s", "quadrupole_ratio", "valid"],
    "lifetimes": ["n", "total_gamma_per_s", "dominant_final_state"],
}

ENV_CONSTANTS = "GRAVIBOUNCE_CONSTANTS"


def _sig(value: float) -> float:
    """Round to 13 significant digits (the machine-output precision)."""
    return float(f"{value:.12e}")


def _build_zeros(count: int) -> list[dict]:
    rows = []
    for n in range(1, count + 1):
        refined = airy.airy_zero(n).lam
        estimate = airy.bs_zero(n)
        rows.append({
            "n": n,
            "lambda": _sig(refined),
            "lambda_bs": _sig(estimate),
            "bs_rel_error": _sig((refined - estimate) / refined),
        })
    return rows


def _build_levels(count: int, scales: bouncer.BouncerScales) -> list[dict]:
    rows = []
    for n in range(1, count + 1):
        state = bouncer.eigenstate(n, scales)
        energy_j = _sig(state.energy)
        rows.append({
            "n": n,
            "lambda": _sig(state.lam),
            "energy_J": energy_j,
            "energy_peV": _sig(energy_j / J_PER_PEV),
            "norm_const_per_sqrt_m": _sig(state.norm_const),
        })
    return rows


def _build_qmatrix(
    max_n: int, scales: bouncer.BouncerScales, constants: PhysicalConstants
) -> list[dict]:
    rows = []
    for k in range(1, max_n + 1):
        for n in range(k, max_n + 1):
            quad = quadrupole.element_quadrature(k, n, scales, constants).dimensionless
            if k == n:
                closed = rel_diff = None
            else:
                closed = quadrupole.element_closed(k, n, scales, constants).dimensionless
                rel_diff = _sig(abs(closed - quad) / abs(closed))
                closed = _sig(closed)
            rows.append({
                "k": k,
                "n": n,
                "elem_closed": closed,
                "elem_quadrature": _sig(quad),
                "rel_diff": rel_diff,
            })
    return rows


def _build_rates(
    max_n: int,
    scales: bouncer.BouncerScales,
    constants: PhysicalConstants,
    threshold: float,
) -> list[dict]:
    rows = []
    for k in range(2, max_n + 1):
        for n in range(1, k):
            rate = emission.transition(k, n, scales, constants, threshold=threshold)
            rows.append({
                "k": k,
                "n": n,
                "omega_rad_per_s": _sig(rate.omega),
                "gamma_per_s": _sig(rate.gamma),
                "quadrupole_ratio": _sig(rate.quadrupole_ratio),
                "valid": rate.valid,
            })
    return rows


def _build_lifetimes(
    max_n: int,
    scales: bouncer.BouncerScales,
    constants: PhysicalConstants,
    threshold: float,
) -> list[dict]:
    rows = []
    for n in range(1, max_n + 1):
        total, partials = emission.lifetime(n, scales, constants, threshold=threshold)
        dominant = max(partials, key=lambda p: p.gamma).n if partials else None
        rows.append({
            "n": n,
            "total_gamma_per_s": _sig(total),
            "dominant_final_state": dominant,
        })
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return f"{value:.12e}"


def _render_csv(command: str, rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_HEADERS[command])
    for row in rows:
        writer.writerow([_cell(row[name]) for name in _HEADERS[command]])
    return buffer.getvalue()


def _render_json(command: str, rows: list[dict]) -> str:
    ordered = [{name: row[name] for name in _HEADERS[command]} for row in rows]
    return json.dumps(ordered, indent=2) + "\n"


def _render_pretty(command: str, rows: list[dict], scales: bouncer.BouncerScales) -> str:
    lines = [
        f"# z0 = {scales.z0 / M_PER_UM:.2f} um   E0 = {scales.e0 / J_PER_PEV:.2f} peV",
    ]
    headers = _HEADERS[command]
    table = [[_pretty_cell(row[name]) for name in headers] for row in rows]
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in table), default=0))
        for i in range(len(headers))
    ]
    lines.append("  ".join(h.rjust(widths[i]) for i, h in enumerate(headers)))
    for r in table:
        lines.append("  ".join(c.rjust(widths[i]) for i, c in enumerate(r)))
    return "\n".join(lines) + "\n"


def _pretty_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if value == 0.0 or 1e-3 <= abs(value) < 1e5:
        return f"{value:.6g}"
    return f"{value:.4e}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravibounce",
        description=(
            "Gravitationally bound quantum states above a mirror: Airy-zero "
            "spectra, quadrupole matrix elements, and graviton emission rates."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="machine output format"
    )
    common.add_argument(
        "--constants",
        metavar="PATH",
        default=None,
        help=f"constants override file (falls back to ${ENV_CONSTANTS})",
    )
    common.add_argument(
        "--threshold",
        type=float,
        default=emission.DEFAULT_VALIDITY_THRESHOLD,
        help="quadrupole validity threshold on omega*z_k/c (default %(default)s)",
    )
    common.add_argument(
        "--pretty", action="store_true", help="human-readable table with display units"
    )

    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("zeros", "refined Airy zeros vs the semiclassical estimate"),
        ("levels", "energy levels and normalization constants"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--count", type=int, default=10, help="number of states (default 10)")
    for name, help_text in (
        ("qmatrix", "matrix elements <k|z^2|n>, closed form vs quadrature"),
        ("rates", "emission rates for all downward transitions"),
        ("lifetimes", "total decay rates and dominant channels"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--max", type=int, default=5, help="largest state index (default 5)")
    return parser


def _load(args) -> PhysicalConstants:
    path = args.constants or os.environ.get(ENV_CONSTANTS)
    return load_constants(path) if path else default_constants()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command in ("zeros", "levels"):
        if not 1 <= args.count <= 10_000:
            parser.error(f"--count must be between 1 and 10000, got {args.count}")
        size = args.count
    else:
        if not 1 <= args.max <= 200:
            parser.error(f"--max must be between 1 and 200, got {args.max}")
        size = args.max
    if not args.threshold > 0:
        parser.error(f"--threshold must be positive, got {args.threshold}")

    try:
        constants = _load(args)
    except ConstantsError as exc:
        print(f"gravibounce: error: {exc}", file=sys.stderr)
        return 2

    scales = bouncer.scales(constants)
    try:
        if args.command == "zeros":
            rows = _build_zeros(size)
        elif args.command == "levels":
            rows = _build_levels(size, scales)
        elif args.command == "qmatrix":
            rows = _build_qmatrix(size, scales, constants)
        elif args.command == "rates":
            rows = _build_rates(size, scales, constants, args.threshold)
        else:
            rows = _build_lifetimes(size, scales, constants, args.threshold)
    except ConvergenceError as exc:
        print(f"gravibounce: numerical failure: {exc}", file=sys.stderr)
        return 3

    if args.pretty:
        sys.stdout.write(_render_pretty(args.command, rows, scales))
    elif args.format == "json":
        sys.stdout.write(_render_json(args.command, rows))
    else:
        sys.stdout.write(_render_csv(args.command, rows))
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
