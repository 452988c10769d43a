"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
are produced.  Tolerances are fixed here and nowhere else.
"""

import json
import subprocess
import sys

import pytest

from _reference import bisect_airy_zero
from gravibounce import (
    airy_ai,
    airy_zero,
    bs_zero,
    default_constants,
    element_closed,
    element_quadrature,
    omega,
    rate_general,
    rate_prefactor,
    rate_reduced,
    scales,
    validity_crossover_index,
    z_power_moment,
)

J_PER_PEV = 1.602176634e-31
M_PER_UM = 1e-6

CONSTANTS = default_constants()
SCALES = scales(CONSTANTS)


def _report(number: int, description: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    line = f"[{status}] criterion {number}: {description}{suffix}"
    print(line)
    assert ok, line


def test_criterion_1_characteristic_scales():
    z0_um = SCALES.z0 / M_PER_UM
    e0_pev = SCALES.e0 / J_PER_PEV
    ok = abs(z0_um - 5.87) / 5.87 <= 0.005 and abs(e0_pev - 0.60) / 0.60 <= 0.01
    _report(1, "z0 = 5.87 um (+-0.5%) and E0 = 0.60 peV (+-1%)", ok,
            f"z0 = {z0_um:.4f} um, E0 = {e0_pev:.4f} peV")


def test_criterion_2_lowest_zeros():
    lam1 = airy_zero(1).lam
    lam2 = airy_zero(2).lam
    oracle = bisect_airy_zero(lambda t: airy_ai(-t), 2.0, 3.0, steps=60)
    gap_ok = round(lam2 - lam1, 2) == 1.75
    oracle_ok = abs(lam1 - oracle) <= 1e-11
    _report(2, "lam2 - lam1 = 1.75 (2 dp) and lam1 matches 60-step bisection to 1e-11",
            gap_ok and oracle_ok,
            f"gap = {lam2 - lam1:.6f}, |lam1 - bisection| = {abs(lam1 - oracle):.2e}")


def test_criterion_3_semiclassical_quality():
    errors = [(airy_zero(n).lam - bs_zero(n)) / airy_zero(n).lam for n in range(1, 51)]
    first_ok = errors[0] < 0.01
    monotone_ok = all(b < a for a, b in zip(errors, errors[1:]))
    _report(3, "semiclassical zero error < 1% at n=1 and decreasing through n=50",
            first_ok and monotone_ok,
            f"error(1) = {errors[0]:.4%}, error(50) = {errors[-1]:.2e}")


def test_criterion_4_oracle_equivalence():
    worst = 0.0
    for k in range(1, 21):
        for n in range(k + 1, 21):
            closed = element_closed(k, n, SCALES, CONSTANTS).dimensionless
            quad = element_quadrature(k, n, SCALES, CONSTANTS).dimensionless
            worst = max(worst, abs(closed - quad) / abs(closed))
    _report(4, "closed-form vs quadrature matrix elements agree to 1e-6 on k<n<=20",
            worst <= 1e-6, f"worst relative difference = {worst:.2e}")


def test_criterion_5_rate_magnitudes():
    prefactor = rate_prefactor(SCALES, CONSTANTS).value
    gamma_21 = rate_reduced(2, 1, SCALES, CONSTANTS)
    prefactor_ok = 5e-77 / 1.5 <= prefactor <= 5e-77 * 1.5
    gamma_ok = 5e-78 <= gamma_21 <= 2e-77
    _report(5, "prefactor = 5e-77/s within factor 1.5 and rate(2->1) in [5e-78, 2e-77]/s",
            prefactor_ok and gamma_ok,
            f"prefactor = {prefactor:.3e}/s, rate(2->1) = {gamma_21:.3e}/s")


def test_criterion_6_route_equivalence():
    worst = 0.0
    for k in range(2, 21):
        for n in range(1, k):
            q = element_closed(k, n, SCALES, CONSTANTS).q_moment
            w = omega(k, n, SCALES, CONSTANTS)
            general = rate_general(q, w, CONSTANTS)
            reduced = rate_reduced(k, n, SCALES, CONSTANTS)
            worst = max(worst, abs(general - reduced) / reduced)
    _report(6, "general and reduced rate routes agree to 1e-10 on the k,n<=20 grid",
            worst <= 1e-10, f"worst relative difference = {worst:.2e}")


def test_criterion_7_orthonormality():
    worst = 0.0
    for k in range(1, 13):
        for n in range(k, 13):
            overlap = z_power_moment(k, n, SCALES, power=0)
            expected = 1.0 if k == n else 0.0
            worst = max(worst, abs(overlap - expected))
    _report(7, "wavefunction overlaps match the identity within 1e-8 for k,n<=12",
            worst <= 1e-8, f"worst deviation = {worst:.2e}")


def test_criterion_8_validity_crossover():
    crossover = validity_crossover_index(SCALES, CONSTANTS)
    _report(8, "smallest k with omega*z0*lam_k/c >= 1 lies in [1e7, 1e9]",
            1e7 <= crossover <= 1e9, f"crossover index = {crossover}")


def _run_cli(*argv) -> str:
    result = subprocess.run(
        [sys.executable, "-m", "gravibounce.cli", *argv],
        capture_output=True, text=True, check=True,
    )
    return result.stdout


def test_criterion_9_cli_determinism_and_formats():
    commands = [
        ("zeros", "--count", "6"),
        ("levels", "--count", "5"),
        ("qmatrix", "--max", "3"),
        ("rates", "--max", "4"),
        ("lifetimes", "--max", "4"),
    ]
    deterministic = True
    equivalent = True
    for argv in commands:
        first = _run_cli(*argv)
        second = _run_cli(*argv)
        deterministic = deterministic and first == second
        from test_cli import parse_csv  # shared column-typed parser

        _, csv_rows = parse_csv(first)
        json_rows = json.loads(_run_cli(*argv, "--format", "json"))
        equivalent = equivalent and json_rows == csv_rows
    _report(9, "CLI output is byte-deterministic and CSV/JSON values coincide",
            deterministic and equivalent,
            f"{len(commands)} commands checked")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
