"""Tests for the bouncer eigenproblem: scales, energies, wavefunctions."""

import math

import pytest

from gravibounce import eigenstate, scales, wavefunction, z_power_moment
from gravibounce.airy import airy_ai_prime
from gravibounce.constants import PhysicalConstants
from gravibounce.quadrature import integrate

J_PER_PEV = 1.602176634e-31


class TestScales:
    def test_characteristic_length(self, bouncer_scales):
        assert bouncer_scales.z0 == pytest.approx(5.87e-6, rel=0.005)

    def test_characteristic_energy(self, bouncer_scales):
        assert bouncer_scales.e0 / J_PER_PEV == pytest.approx(0.60, rel=0.01)

    def test_defining_relations(self, constants, bouncer_scales):
        cube = constants.hbar**2 / (2.0 * constants.m**2 * constants.g)
        assert bouncer_scales.z0**3 == pytest.approx(cube, rel=1e-12)
        assert bouncer_scales.e0 == pytest.approx(
            constants.m * constants.g * bouncer_scales.z0, rel=1e-12
        )

    def test_mass_scaling_exponent(self, constants, bouncer_scales):
        heavy = scales(PhysicalConstants(
            hbar=constants.hbar, c=constants.c, G=constants.G,
            m=8.0 * constants.m, g=constants.g,
        ))
        # z0 ~ m^(-2/3), so 8x the mass quarters the length
        assert heavy.z0 == pytest.approx(bouncer_scales.z0 / 4.0, rel=1e-12)

    def test_gravity_scaling(self, constants, bouncer_scales):
        strong = scales(PhysicalConstants(
            hbar=constants.hbar, c=constants.c, G=constants.G,
            m=constants.m, g=2.0 * constants.g,
        ))
        assert strong.z0 == pytest.approx(bouncer_scales.z0 * 2.0 ** (-1.0 / 3.0), rel=1e-12)
        assert strong.e0 == pytest.approx(bouncer_scales.e0 * 2.0 ** (2.0 / 3.0), rel=1e-12)


class TestEigenstates:
    def test_ground_state_energy(self, bouncer_scales):
        state = eigenstate(1, bouncer_scales)
        assert state.energy == bouncer_scales.e0 * state.lam
        assert state.energy / J_PER_PEV == pytest.approx(1.41, rel=0.01)

    def test_energies_increase(self, bouncer_scales):
        energies = [eigenstate(n, bouncer_scales).energy for n in range(1, 13)]
        assert all(b > a for a, b in zip(energies, energies[1:]))

    def test_norm_const_positive(self, bouncer_scales):
        assert all(eigenstate(n, bouncer_scales).norm_const > 0 for n in range(1, 13))

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12, 16, 20])
    def test_closed_form_norm_matches_quadrature(self, n, bouncer_scales):
        state = eigenstate(n, bouncer_scales)
        overlap, _ = integrate(
            lambda z: wavefunction(state, bouncer_scales, z) ** 2,
            0.0,
            bouncer_scales.z0 * (state.lam + 15.0),
            rel_tol=1e-12,
            abs_tol=1e-16 / bouncer_scales.z0,
            initial_panels=max(8, int((state.lam + 15.0) / 0.75)),
        )
        quadrature_norm = state.norm_const / math.sqrt(overlap)
        assert state.norm_const == pytest.approx(quadrature_norm, rel=1e-9)

    def test_probability_normalized(self, bouncer_scales):
        assert z_power_moment(1, 1, bouncer_scales, power=0) == pytest.approx(1.0, abs=1e-8)

    def test_orthonormality_sample(self, bouncer_scales):
        for k in range(1, 6):
            for n in range(k, 6):
                overlap = z_power_moment(k, n, bouncer_scales, power=0)
                expected = 1.0 if k == n else 0.0
                assert overlap == pytest.approx(expected, abs=1e-8)


class TestWavefunction:
    def test_vanishes_behind_mirror(self, bouncer_scales):
        state = eigenstate(1, bouncer_scales)
        assert wavefunction(state, bouncer_scales, -1e-9) == 0.0
        assert wavefunction(state, bouncer_scales, -5.0) == 0.0

    def test_vanishes_at_mirror(self, bouncer_scales):
        for n in (1, 2, 7):
            state = eigenstate(n, bouncer_scales)
            assert wavefunction(state, bouncer_scales, 0.0) == 0.0

    def test_near_mirror_continuity(self, bouncer_scales):
        # just above the mirror the amplitude rises linearly from zero
        state = eigenstate(3, bouncer_scales)
        z = 1e-12 * bouncer_scales.z0
        slope = abs(airy_ai_prime(-state.lam))
        expected = state.norm_const * slope * z / bouncer_scales.z0
        assert abs(wavefunction(state, bouncer_scales, z)) == pytest.approx(expected, rel=1e-3)

    def test_turning_point_value(self, bouncer_scales):
        # at z = z0*lam_n the argument of Ai is exactly zero
        for n in (1, 4):
            state = eigenstate(n, bouncer_scales)
            value = wavefunction(state, bouncer_scales, bouncer_scales.z0 * state.lam)
            assert value == pytest.approx(state.norm_const * 0.3550280538878172, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_schrodinger_residual(self, n, constants, bouncer_scales):
        state = eigenstate(n, bouncer_scales)
        z0 = bouncer_scales.z0
        h = 1.5e-4 * z0
        span = z0 * (state.lam + 4.0)
        psi = lambda z: wavefunction(state, bouncer_scales, z)
        grid = [(i + 0.5) / 100.0 * span for i in range(100)]
        psi_max = max(abs(psi(z)) for z in grid)
        bound = 1e-6 * bouncer_scales.e0 * psi_max
        kinetic_scale = constants.hbar**2 / (2.0 * constants.m)
        for z in grid:
            second = (psi(z + h) - 2.0 * psi(z) + psi(z - h)) / (h * h)
            residual = (
                -kinetic_scale * second
                + constants.m * constants.g * z * psi(z)
                - state.energy * psi(z)
            )
            assert abs(residual) <= bound

    def test_norm_closed_form_identity(self, bouncer_scales):
        # norm_const is 1/(sqrt(z0)*|Ai'(-lam_n)|) by construction
        state = eigenstate(6, bouncer_scales)
        expected = 1.0 / (math.sqrt(bouncer_scales.z0) * abs(airy_ai_prime(-state.lam)))
        assert state.norm_const == expected
