"""SU(2) generators on a degenerate eigenspace, coherent states, Glauber states.

Inside a subspace the transformed ladder operators step n1' by p and n2'
by q with the usual sqrt factors of the internal numbers (n1, n2), so
every subspace carries the same (2j+1)-dimensional angular-momentum
matrices regardless of (p, q, lambda1, lambda2).

Coherent states are parametrized internally by (theta, phi) rather than
tau = tan(theta/2)*e^{i*phi}, so the theta = pi point (tau at infinity)
is representable; amplitudes are assembled in the log domain to support
N of several hundred without overflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError
from .oscillator import OscillatorConfig, SubspaceBasis, enumerate_subspace


@dataclass(frozen=True)
class SU2Generators:
    """Dense angular-momentum matrices in the m = -j..+j ordered basis."""

    j: float
    Jp: np.ndarray
    Jm: np.ndarray
    Jz: np.ndarray
    Jx: np.ndarray
    Jy: np.ndarray
    J0_eigenvalue: float

    @property
    def dim(self) -> int:
        return self.Jz.shape[0]


def build_generators(basis: SubspaceBasis) -> SU2Generators:
    """Matrices of J+, J-, Jz, Jx, Jy acting on a degenerate eigenspace.

    J+ raises n1 by one p-step and lowers n2 by one q-step, picking up
    sqrt((n1+1)*n2); in terms of m it sends m -> m+1, so its entries sit
    at [i+1, i] for coefficient vectors in the m-ascending basis.
    """
    d = basis.dim
    internal = basis.internal_numbers()
    Jp = np.zeros((d, d), dtype=complex)
    for i in range(d - 1):
        n1, n2 = internal[i]
        Jp[i + 1, i] = math.sqrt((n1 + 1) * n2)
    Jm = Jp.conj().T.copy()
    m = (internal[:, 0] - internal[:, 1]) / 2.0
    Jz = np.diag(m.astype(complex))
    Jx = (Jp + Jm) / 2.0
    Jy = -1j * (Jp - Jm) / 2.0
    return SU2Generators(j=basis.j, Jp=Jp, Jm=Jm, Jz=Jz, Jx=Jx, Jy=Jy,
                         J0_eigenvalue=basis.j)


@dataclass(frozen=True)
class SU2CoherentSpec:
    """Sphere point (theta, phi) and subspace labels for a coherent state."""

    N: int
    theta: float
    phi: float = 0.0
    lambda1: int = 0
    lambda2: int = 0

    def __post_init__(self):
        if self.N < 0:
            raise DomainError(f"N must be nonnegative, got {self.N}")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise DomainError(f"phi must lie in [0, 2*pi), got {self.phi}")
        if self.lambda1 < 0 or self.lambda2 < 0:
            raise DomainError("lambda values must be nonnegative")

    @property
    def j(self) -> float:
        return self.N / 2.0

    @property
    def tau(self) -> complex:
        """tan(theta/2)*e^{i*phi}; infinite at theta = pi."""
        if self.theta == math.pi:
            return complex(math.inf, math.inf)
        return math.tan(0.5 * self.theta) * cmath.exp(1j * self.phi)


@dataclass(frozen=True)
class TruncatedFock:
    """Product Fock basis {0..n1_max} x {0..n2_max}, n1 slowest."""

    n1_max: int
    n2_max: int

    @property
    def dim(self) -> int:
        return (self.n1_max + 1) * (self.n2_max + 1)

    @property
    def occupations(self) -> np.ndarray:
        n1, n2 = np.meshgrid(np.arange(self.n1_max + 1),
                             np.arange(self.n2_max + 1), indexing="ij")
        return np.column_stack([n1.ravel(), n2.ravel()])


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over a subspace basis or a truncated Fock basis."""

    basis: SubspaceBasis | TruncatedFock
    amplitudes: np.ndarray

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def occupations(self) -> np.ndarray:
        return self.basis.occupations

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def coherent_amplitudes(N: int, theta: float, phi: float) -> np.ndarray:
    """Binomial amplitudes binom(N, k)^(1/2) tau^k / (1+|tau|^2)^(N/2), k = 0..N.

    Computed as sin(theta/2)^k cos(theta/2)^(N-k) in the log domain; the
    phase carried is e^{i*k*phi} with no extra rephasing.
    """
    k = np.arange(N + 1)
    half = 0.5 * theta
    s, c = math.sin(half), math.cos(half)
    if s == 0.0:
        mags = np.zeros(N + 1)
        mags[0] = 1.0
    elif c == 0.0:
        mags = np.zeros(N + 1)
        mags[N] = 1.0
    else:
        logmag = (0.5 * (gammaln(N + 1) - gammaln(k + 1) - gammaln(N - k + 1))
                  + k * math.log(s) + (N - k) * math.log(c))
        mags = np.exp(logmag)
    amps = mags * np.exp(1j * phi * k)
    return amps / np.linalg.norm(amps)


def build_su2_coherent(spec: SU2CoherentSpec, basis: SubspaceBasis) -> StateVector:
    """SU(2) coherent state over a degenerate eigenspace."""
    if basis.j != spec.N / 2.0:
        raise DomainError(f"basis has j={basis.j} but spec requires j={spec.N / 2.0}")
    if (basis.lambda1, basis.lambda2) != (spec.lambda1, spec.lambda2):
        raise DomainError("basis residues do not match the coherent-state spec")
    return StateVector(basis=basis,
                       amplitudes=coherent_amplitudes(spec.N, spec.theta, spec.phi))


def j_expectations(state: StateVector, gens: SU2Generators) -> tuple[float, float, float]:
    """(<Jx>, <Jy>, <Jz>) in the given state.

    For a coherent state at (theta, phi) these are
    (j sin(theta) cos(phi), -j sin(theta) sin(phi), -j cos(theta)).
    """
    c = state.amplitudes
    if c.shape[0] != gens.dim:
        raise DomainError(f"state dimension {c.shape[0]} does not match "
                          f"generator dimension {gens.dim}")
    jx = np.vdot(c, gens.Jx @ c).real
    jy = np.vdot(c, gens.Jy @ c).real
    jz = np.vdot(c, gens.Jz @ c).real
    return (float(jx), float(jy), float(jz))


def _poissonian_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """Single-mode coherent amplitudes e^{-|a|^2/2} a^n / sqrt(n!), n = 0..n_max."""
    n = np.arange(n_max + 1)
    if alpha == 0:
        amps = np.zeros(n_max + 1, dtype=complex)
        amps[0] = 1.0
        return amps
    logmag = (-0.5 * abs(alpha) ** 2 + n * math.log(abs(alpha))
              - 0.5 * gammaln(n + 1))
    return np.exp(logmag) * np.exp(1j * cmath.phase(alpha) * n)


def _poisson_cutoff(mean: float, tail_tolerance: float) -> int:
    """Smallest n with P(Poisson(mean) > n) < tail_tolerance, by summation."""
    if mean == 0.0:
        return 0
    log_term = -mean
    log_cum = log_term
    n = 0
    log_keep = math.log1p(-tail_tolerance)
    while log_cum < log_keep:
        n += 1
        log_term += math.log(mean / n)
        log_cum = np.logaddexp(log_cum, log_term)
    return n


def build_glauber(alpha1: complex, alpha2: complex,
                  tail_tolerance: float = 1e-12) -> StateVector:
    """Two-mode coherent state truncated so each mode discards < tail_tolerance."""
    if not 0.0 < tail_tolerance < 1.0:
        raise DomainError(f"tail_tolerance must lie in (0, 1), got {tail_tolerance}")
    n1_max = _poisson_cutoff(abs(alpha1) ** 2, tail_tolerance)
    n2_max = _poisson_cutoff(abs(alpha2) ** 2, tail_tolerance)
    v1 = _poissonian_amplitudes(alpha1, n1_max)
    v2 = _poissonian_amplitudes(alpha2, n2_max)
    return StateVector(basis=TruncatedFock(n1_max, n2_max),
                       amplitudes=np.kron(v1, v2))


def decompose_glauber_su2(alpha1: complex, alpha2: complex,
                          j_max: float) -> list[tuple[float, complex, StateVector]]:
    """Project a two-mode Glauber state (isotropic case, p = q = 1) onto each j.

    Returns (j, weight, projected_state) for 2j = 0..2*j_max, assembled by
    direct Fock expansion: the raw projection onto n1 + n2 = 2j is
    normalized with its phase untouched, and weight = ||projection|| so
    that the Glauber state equals sum_j weight * projected_state on the
    covered subspaces.  |weight|^2 follows e^{-R} R^{2j} / (2j)! with
    R = |alpha1|^2 + |alpha2|^2.
    """
    if alpha2 == 0:
        raise DomainError("alpha2 = 0 puts tau = alpha1/alpha2 at the chart pole; "
                          "use the theta = pi parametrization instead")
    iso = OscillatorConfig(p=1, q=1, omega=1.0)
    result = []
    for two_j in range(int(round(2 * j_max)) + 1):
        basis = enumerate_subspace(iso, 0, 0, two_j)
        n1 = np.arange(two_j + 1)
        n2 = two_j - n1
        raw = _poissonian_amplitudes(alpha1, two_j)[n1] \
            * _poissonian_amplitudes(alpha2, two_j)[n2]
        w = np.linalg.norm(raw)
        state = StateVector(basis=basis, amplitudes=raw / w if w > 0 else raw)
        result.append((two_j / 2.0, complex(w), state))
    return result


def evolve_expectations(alpha1: complex, alpha2: complex, cfg: OscillatorConfig,
                        t) -> tuple[complex, complex]:
    """Heisenberg evolution of the mode expectations:
    (alpha1 e^{-i q w t}, alpha2 e^{-i p w t}).  t may be an array."""
    t = np.asarray(t, dtype=float)
    a1 = alpha1 * np.exp(-1j * cfg.q * cfg.omega * t)
    a2 = alpha2 * np.exp(-1j * cfg.p * cfg.omega * t)
    if t.ndim == 0:
        return (complex(a1), complex(a2))
    return (a1, a2)
