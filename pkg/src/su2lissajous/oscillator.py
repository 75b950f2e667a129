"""Oscillator configuration, degenerate eigenspaces and Bezout coefficients.

The 2-D oscillator has mode frequencies q*omega along x and p*omega along
y (natural units, hbar = mass = 1).  Its number states |n1', n2'> split
into q*p families labelled by the residues lambda1 = n1' mod p and
lambda2 = n2' mod q; within a family, all states with the same internal
total n1 + n2 = N are degenerate.  p and q are kept as given: (p, q) and
(l*p, l*q) are physically distinct setups, so the common factor
M = gcd(p, q) is never divided out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def _check_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")
    return int(value)


@dataclass(frozen=True)
class OscillatorConfig:
    """Frequency multipliers p, q and the common frequency omega."""

    p: int
    q: int
    omega: float = 1.0

    def __post_init__(self):
        _check_positive_int(self.p, "p")
        _check_positive_int(self.q, "q")
        if not self.omega > 0:
            raise DomainError(f"omega must be positive, got {self.omega}")

    @property
    def M(self) -> int:
        """gcd(p, q): the size of a coherent state's orbit ensemble."""
        return math.gcd(self.p, self.q)

    @property
    def omega_prime(self) -> float:
        """Common frequency omega*p*q of the untwisted (isotropic) motion."""
        return self.omega * self.p * self.q


@dataclass(frozen=True)
class BezoutSolution:
    """Integers with p*nu1 + q*nu2 = M = gcd(p, q)."""

    M: int
    nu1: int
    nu2: int


def gcd_bezout(p: int, q: int) -> BezoutSolution:
    """Solve p*nu1 + q*nu2 = gcd(p, q) in integers.

    The solution is made unique by picking the representative with
    0 <= nu1 < q/M, so outputs are deterministic.
    """
    p = _check_positive_int(p, "p")
    q = _check_positive_int(q, "q")
    M = math.gcd(p, q)
    q_red = q // M
    # p*nu1 == M (mod q)  <=>  (p/M)*nu1 == 1 (mod q/M)
    nu1 = pow(p // M, -1, q_red)
    nu2 = (M - p * nu1) // q
    return BezoutSolution(M=M, nu1=nu1, nu2=nu2)


@dataclass(frozen=True)
class SubspaceBasis:
    """One degenerate eigenspace of the oscillator.

    states[i] = (i*p + lambda1, (N - i)*q + lambda2) for i = 0..N: the
    occupation pairs ordered by m = (n1 - n2)/2 ascending from -j to +j,
    where (n1, n2) are the internal numbers and j = N/2.
    """

    cfg: OscillatorConfig
    lambda1: int
    lambda2: int
    j: float
    states: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.states)

    @property
    def occupations(self) -> np.ndarray:
        """(dim, 2) array of the (n1', n2') occupation pairs."""
        return np.array(self.states, dtype=int).reshape(self.dim, 2)

    def internal_numbers(self) -> np.ndarray:
        """(dim, 2) array of the internal (n1, n2) with n1' = n1*p + lambda1 etc."""
        occ = self.occupations
        n1 = (occ[:, 0] - self.lambda1) // self.cfg.p
        n2 = (occ[:, 1] - self.lambda2) // self.cfg.q
        return np.column_stack([n1, n2])


def enumerate_subspace(cfg: OscillatorConfig, lambda1: int, lambda2: int,
                       N: int) -> SubspaceBasis:
    """Degenerate eigenspace with residues (lambda1, lambda2) and j = N/2."""
    if not 0 <= lambda1 < cfg.p:
        raise DomainError(f"lambda1 must lie in [0, p) = [0, {cfg.p}), got {lambda1}")
    if not 0 <= lambda2 < cfg.q:
        raise DomainError(f"lambda2 must lie in [0, q) = [0, {cfg.q}), got {lambda2}")
    if N < 0:
        raise DomainError(f"N must be a nonnegative integer, got {N}")
    states = tuple((n1 * cfg.p + lambda1, (N - n1) * cfg.q + lambda2)
                   for n1 in range(N + 1))
    return SubspaceBasis(cfg=cfg, lambda1=lambda1, lambda2=lambda2,
                         j=N / 2, states=states)


def energy_of_state(cfg: OscillatorConfig, n1_prime: int, n2_prime: int) -> float:
    """Energy q*omega*(n1' + 1/2) + p*omega*(n2' + 1/2) of a number state."""
    if n1_prime < 0 or n2_prime < 0:
        raise DomainError("occupation numbers must be nonnegative")
    return cfg.omega * (cfg.q * (n1_prime + 0.5) + cfg.p * (n2_prime + 0.5))


def subspace_energy(cfg: OscillatorConfig, basis: SubspaceBasis) -> float:
    """The energy shared by every member of a degenerate eigenspace.

    Equals omega'*[N + (lambda1 + 1/2)/p + (lambda2 + 1/2)/q].  (The
    untwisted isotropic picture assigns the same subspace the eigenvalue
    omega'*(N + 1); that constant-shifted value is what enters the
    classical energy identification, see orbits.classical_energy.)
    """
    return energy_of_state(cfg, *basis.states[0])
