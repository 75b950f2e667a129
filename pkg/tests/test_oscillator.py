"""Tests for the oscillator configuration, subspace enumeration and Bezout solver."""

import math

import numpy as np
import pytest

from su2lissajous import (DomainError, OscillatorConfig, energy_of_state,
                          enumerate_subspace, gcd_bezout, subspace_energy)


def test_config_derived_quantities():
    cfg = OscillatorConfig(p=4, q=6, omega=0.5)
    assert cfg.M == 2
    assert cfg.omega_prime == 0.5 * 4 * 6


@pytest.mark.parametrize("p,q,omega", [(0, 1, 1.0), (1, 0, 1.0), (1, 1, 0.0),
                                       (1, 1, -2.0), (-3, 2, 1.0)])
def test_config_rejects_bad_input(p, q, omega):
    with pytest.raises(DomainError):
        OscillatorConfig(p=p, q=q, omega=omega)


@pytest.mark.parametrize("p,q,expected", [(1, 1, (1, 0, 1)),
                                          (2, 3, (1, 2, -1)),
                                          (4, 6, (2, 2, -1))])
def test_bezout_examples(p, q, expected):
    sol = gcd_bezout(p, q)
    assert (sol.M, sol.nu1, sol.nu2) == expected


def test_bezout_identity_exhaustive():
    # exact integer identity and canonical range over the full grid
    for p in range(1, 201):
        for q in range(1, 201):
            sol = gcd_bezout(p, q)
            assert sol.M == math.gcd(p, q)
            assert p * sol.nu1 + q * sol.nu2 == sol.M
            assert 0 <= sol.nu1 < max(q // sol.M, 1)


def test_bezout_identity_large_values():
    rng = np.random.default_rng(7)
    for _ in range(2000):
        p = int(rng.integers(1, 1001))
        q = int(rng.integers(1, 1001))
        sol = gcd_bezout(p, q)
        assert p * sol.nu1 + q * sol.nu2 == math.gcd(p, q)
        assert 0 <= sol.nu1 < max(q // sol.M, 1)


def test_enumerate_subspace_isotropic():
    cfg = OscillatorConfig(1, 1)
    basis = enumerate_subspace(cfg, 0, 0, 2)
    assert basis.states == ((0, 2), (1, 1), (2, 0))
    assert basis.j == 1.0
    assert basis.dim == 3


def test_enumerate_subspace_anisotropic():
    cfg = OscillatorConfig(2, 3)
    assert enumerate_subspace(cfg, 0, 0, 1).states == ((0, 3), (2, 0))
    assert enumerate_subspace(cfg, 1, 2, 1).states == ((1, 5), (3, 2))


def test_enumerate_subspace_residues_and_ordering():
    cfg = OscillatorConfig(3, 5)
    basis = enumerate_subspace(cfg, 2, 4, 7)
    assert basis.dim == 8
    occ = basis.occupations
    assert np.all(occ[:, 0] % 3 == 2)
    assert np.all(occ[:, 1] % 5 == 4)
    internal = basis.internal_numbers()
    m = (internal[:, 0] - internal[:, 1]) / 2
    assert np.all(np.diff(m) == 1.0)
    assert m[0] == -basis.j and m[-1] == basis.j


def test_enumerate_subspace_rejects_bad_lambda():
    cfg = OscillatorConfig(2, 3)
    with pytest.raises(DomainError):
        enumerate_subspace(cfg, 2, 0, 1)
    with pytest.raises(DomainError):
        enumerate_subspace(cfg, 0, 3, 1)
    with pytest.raises(DomainError):
        enumerate_subspace(cfg, 0, -1, 1)
    with pytest.raises(DomainError):
        enumerate_subspace(cfg, 0, 0, -1)


def test_energy_examples():
    assert energy_of_state(OscillatorConfig(2, 3), 0, 0) == 2.5
    assert energy_of_state(OscillatorConfig(1, 1), 0, 0) == 1.0
    # one unit of internal N costs omega' = omega*p*q
    cfg = OscillatorConfig(2, 3)
    assert energy_of_state(cfg, 2, 0) - energy_of_state(cfg, 0, 0) == 6.0
    # (2, 3) is the internal (n1, n2) = (1, 1) state: a jump of N by 2
    assert energy_of_state(cfg, 2, 3) - energy_of_state(cfg, 0, 0) == 12.0


def test_subspace_energy_values():
    assert subspace_energy(OscillatorConfig(1, 1),
                           enumerate_subspace(OscillatorConfig(1, 1), 0, 0, 0)) == 1.0
    cfg = OscillatorConfig(2, 3)
    assert subspace_energy(cfg, enumerate_subspace(cfg, 1, 2, 0)) == 9.5
    # omega'[N + (1/2)/p + (1/2)/q]; the isotropic-picture value omega'(N+1)
    # differs by a constant shift and is not the eigenvalue of H
    assert subspace_energy(cfg, enumerate_subspace(cfg, 0, 0, 4)) == 26.5


def test_members_share_energy():
    for p, q in [(1, 1), (2, 3), (4, 6), (5, 2)]:
        cfg = OscillatorConfig(p, q, omega=0.7)
        for lam1 in range(p):
            for lam2 in range(q):
                for N in (0, 1, 5):
                    basis = enumerate_subspace(cfg, lam1, lam2, N)
                    energies = [energy_of_state(cfg, n1, n2)
                                for n1, n2 in basis.states]
                    ref = subspace_energy(cfg, basis)
                    assert all(abs(e - ref) <= 1e-12 * abs(ref) for e in energies)


def test_isotropic_subspace_energy_matches_casimir_form():
    # only at p = q = 1 does the physical energy equal omega'(N + 1)
    cfg = OscillatorConfig(1, 1, omega=1.3)
    for N in range(6):
        basis = enumerate_subspace(cfg, 0, 0, N)
        assert subspace_energy(cfg, basis) == pytest.approx(cfg.omega_prime * (N + 1))


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (4, 6), (3, 3)])
def test_subspaces_partition_fock_space(p, q):
    # every (n1', n2') with n1', n2' <= 30 appears in exactly one subspace
    cfg = OscillatorConfig(p, q)
    seen = {}
    bound = 30
    max_N = bound  # n1 <= n1' <= 30 implies N <= 30 per mode
    for lam1 in range(p):
        for lam2 in range(q):
            for N in range(2 * max_N + 1):
                for n1, n2 in enumerate_subspace(cfg, lam1, lam2, N).states:
                    if n1 <= bound and n2 <= bound:
                        key = (n1, n2)
                        assert key not in seen, f"duplicate {key}"
                        seen[key] = (lam1, lam2, N)
    assert len(seen) == (bound + 1) ** 2
