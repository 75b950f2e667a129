"""Tests for Hermite functions, density evaluation and grid integration."""

import math

import numpy as np
import pytest
from scipy.special import eval_hermite, factorial

from su2lissajous import (DensityField, DomainError, GridSpec,
                          OscillatorConfig, StateVector, SU2CoherentSpec,
                          build_su2_coherent, default_grid, enumerate_subspace,
                          evaluate_density, hermite_function_table,
                          ho_eigenfunction, integrate, orbits_from_coherent)


def hermite_oracle(n, omega_eff, x):
    """Explicit-polynomial reference: (w/pi)^(1/4) H_n(xi) e^{-xi^2/2} / sqrt(2^n n!)."""
    xi = math.sqrt(omega_eff) * np.asarray(x, dtype=float)
    norm = math.sqrt(2.0 ** n * factorial(n, exact=True) * math.sqrt(math.pi))
    return omega_eff ** 0.25 * eval_hermite(n, xi) * np.exp(-0.5 * xi ** 2) / norm


def test_eigenfunction_values_at_origin():
    assert ho_eigenfunction(0, 1.0, 0.0) == pytest.approx(math.pi ** -0.25)
    assert ho_eigenfunction(1, 1.0, 0.0) == 0.0
    assert ho_eigenfunction(1, 2.7, 0.0) == 0.0
    assert ho_eigenfunction(2, 1.0, 0.0) == pytest.approx(
        -math.pi ** -0.25 / math.sqrt(2))


def test_recurrence_matches_explicit_polynomials():
    x = np.linspace(-10.0, 10.0, 401)
    for omega_eff in (1.0, 0.3, 2.6):
        for n in range(31):
            ours = ho_eigenfunction(n, omega_eff, x)
            ref = hermite_oracle(n, omega_eff, x)
            scale = np.abs(ref).max()
            np.testing.assert_allclose(ours, ref, atol=1e-10 * scale)


def test_table_consistent_with_single_level():
    x = np.linspace(-6.0, 6.0, 101)
    table = hermite_function_table(25, 1.7, x)
    for n in (0, 3, 17, 25):
        np.testing.assert_allclose(table[n], ho_eigenfunction(n, 1.7, x),
                                   atol=1e-14)


def test_orthonormality_riemann():
    omega_eff = 1.0
    n_max = 50
    half = math.sqrt(2 * n_max + 1) + 6 / math.sqrt(omega_eff)
    x = np.linspace(-half, half, 8192)
    dx = x[1] - x[0]
    table = hermite_function_table(n_max, omega_eff, x)
    gram = table @ table.T * dx
    np.testing.assert_allclose(gram, np.eye(n_max + 1), atol=1e-8)


def test_unit_norm_other_frequency():
    omega_eff = 2.3
    n = 40
    half = (math.sqrt(2 * n + 1) + 8) / math.sqrt(omega_eff)
    x = np.linspace(-half, half, 20000)
    vals = ho_eigenfunction(n, omega_eff, x)
    assert np.trapezoid(vals ** 2, x) == pytest.approx(1.0, abs=1e-8)


def test_high_level_no_overflow_and_nonzero():
    n = 10000
    turning = math.sqrt(2 * n + 1)
    xi = np.linspace(-turning - 10, turning + 10, 601)
    vals = ho_eigenfunction(n, 1.0, xi)
    assert np.all(np.isfinite(vals))
    assert np.abs(vals).max() < 1.0
    # the naive recurrence underflows to zero at the turning point
    at_turning = ho_eigenfunction(n, 1.0, turning)
    assert abs(at_turning) > 1e-3


def test_high_level_norm():
    n = 500
    half = math.sqrt(2 * n + 1) + 8
    x = np.linspace(-half, half, 20000)
    vals = ho_eigenfunction(n, 1.0, x)
    assert np.trapezoid(vals ** 2, x) == pytest.approx(1.0, abs=1e-8)


def test_eigenfunction_rejects_bad_input():
    with pytest.raises(DomainError):
        ho_eigenfunction(-1, 1.0, 0.0)
    with pytest.raises(DomainError):
        ho_eigenfunction(10001, 1.0, 0.0)
    with pytest.raises(DomainError):
        ho_eigenfunction(1, 0.0, 0.0)


def test_grid_spec_centers_and_area():
    grid = GridSpec(-1.0, 1.0, 4, 0.0, 2.0, 2)
    np.testing.assert_allclose(grid.x_centers(), [-0.75, -0.25, 0.25, 0.75])
    np.testing.assert_allclose(grid.y_centers(), [0.5, 1.5])
    assert grid.cell_area == pytest.approx(0.5)
    with pytest.raises(DomainError):
        GridSpec(1.0, -1.0, 4, 0.0, 1.0, 4)
    with pytest.raises(DomainError):
        GridSpec(-1.0, 1.0, 0, 0.0, 1.0, 4)


def vacuum_state(cfg):
    basis = enumerate_subspace(cfg, 0, 0, 0)
    return StateVector(basis=basis, amplitudes=np.array([1.0 + 0j]))


def test_vacuum_density_peak():
    cfg = OscillatorConfig(2, 3, omega=1.0)
    grid = GridSpec(-0.005, 0.005, 1, -0.005, 0.005, 1)  # single cell at origin
    field = evaluate_density(vacuum_state(cfg), cfg, grid)
    expected = math.sqrt(cfg.q * cfg.omega * cfg.p * cfg.omega) / math.pi
    assert field.values[0, 0] == pytest.approx(expected, rel=1e-4)


def test_vacuum_density_integral():
    cfg = OscillatorConfig(1, 1, omega=1.0)
    sigma = 1.0 / math.sqrt(2 * cfg.omega)
    half = 8 * sigma
    grid = GridSpec(-half, half, 512, -half, half, 512)
    field = evaluate_density(vacuum_state(cfg), cfg, grid)
    assert integrate(field) == pytest.approx(1.0, abs=1e-6)


def test_single_fock_state_is_separable():
    cfg = OscillatorConfig(1, 2, omega=1.3)
    basis = enumerate_subspace(cfg, 0, 1, 3)
    amps = np.zeros(4, dtype=complex)
    amps[2] = 1.0                       # the state (2, 3) in this subspace
    n1p, n2p = basis.states[2]
    grid = GridSpec(-4.0, 4.0, 64, -4.0, 4.0, 48)
    field = evaluate_density(StateVector(basis=basis, amplitudes=amps), cfg, grid)
    fx = ho_eigenfunction(n1p, cfg.q * cfg.omega, grid.x_centers()) ** 2
    fy = ho_eigenfunction(n2p, cfg.p * cfg.omega, grid.y_centers()) ** 2
    np.testing.assert_allclose(field.values, np.outer(fy, fx), atol=1e-14)


def test_coherent_density_normalized_on_wide_grid():
    cfg = OscillatorConfig(1, 2, omega=1.0)
    spec = SU2CoherentSpec(N=40, theta=math.pi / 2, phi=0.0)
    basis = enumerate_subspace(cfg, 0, 0, 40)
    state = build_su2_coherent(spec, basis)
    grid = default_grid(orbits_from_coherent(spec, cfg))
    mass = integrate(evaluate_density(state, cfg, grid))
    assert 0.999 <= mass <= 1.001


def test_integrate_zero_field():
    grid = GridSpec(-1.0, 1.0, 8, -1.0, 1.0, 8)
    assert integrate(DensityField(grid=grid, values=np.zeros((8, 8)))) == 0.0


def test_density_is_deterministic():
    cfg = OscillatorConfig(2, 3, omega=0.9)
    basis = enumerate_subspace(cfg, 1, 2, 6)
    spec = SU2CoherentSpec(N=6, theta=1.0, phi=0.5, lambda1=1, lambda2=2)
    state = build_su2_coherent(spec, basis)
    grid = GridSpec(-6.0, 6.0, 128, -6.0, 6.0, 128)
    a = evaluate_density(state, cfg, grid).values
    b = evaluate_density(state, cfg, grid).values
    assert np.array_equal(a, b)


def test_density_row_major_y_slowest():
    # values[iy, ix] samples (x_centers[ix], y_centers[iy])
    cfg = OscillatorConfig(1, 1)
    basis = enumerate_subspace(cfg, 0, 0, 1)
    amps = np.array([0.0, 1.0 + 0j])    # state (1, 0): excited along x only
    grid = GridSpec(-3.0, 3.0, 32, -3.0, 3.0, 32)
    field = evaluate_density(StateVector(basis=basis, amplitudes=amps), cfg, grid)
    ix = 20
    iy = 5
    fx = ho_eigenfunction(1, 1.0, grid.x_centers()[ix])
    fy = ho_eigenfunction(0, 1.0, grid.y_centers()[iy])
    assert field.values[iy, ix] == pytest.approx((fx * fy) ** 2, rel=1e-12)


def test_default_grid_rule():
    cfg = OscillatorConfig(1, 2, omega=1.0)
    spec = SU2CoherentSpec(N=40, theta=math.pi / 2, phi=0.0)
    ens = orbits_from_coherent(spec, cfg)
    grid = default_grid(ens)
    expected_half = 1.25 * max(ens.orbits[0].eta1, ens.orbits[0].eta2) + 4.0
    assert grid.x_max == pytest.approx(expected_half)
    assert grid.nx == grid.ny == 512
