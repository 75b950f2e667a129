"""Classical Lissajous orbits and their link to coherent-state parameters.

An orbit is x(t) = eta1 cos(q w t - phi1), y(t) = eta2 cos(p w t - phi2),
closed with period 2*pi/w.  The untwisting map z -> z~ (one p-th/q-th
power per mode, with 1/sqrt(p), 1/sqrt(q) moduli) makes both modes rotate
at the common frequency w*p*q, so z2~/z1~ is a constant of the motion;
identifying it with the stereographic image of the coherent state's
sphere point fixes the orbit amplitudes and, through a Bezout analysis of
the phase condition p*phi1 - q*phi2 = phi + 2*pi*k, an ensemble of
M = gcd(p, q) distinct orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .oscillator import OscillatorConfig
from .su2 import SU2CoherentSpec


@dataclass(frozen=True)
class LissajousOrbit:
    """Amplitudes and phases of one closed trajectory."""

    eta1: float
    eta2: float
    phi1: float
    phi2: float
    cfg: OscillatorConfig

    def __post_init__(self):
        if self.eta1 < 0 or self.eta2 < 0:
            raise DomainError("orbit amplitudes must be nonnegative")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.cfg.omega


@dataclass(frozen=True)
class LissajousEnsemble:
    """The M = gcd(p, q) orbits corresponding to one coherent state."""

    orbits: tuple[LissajousOrbit, ...]
    k_labels: tuple[int, ...]

    @property
    def M(self) -> int:
        return len(self.orbits)


@dataclass(frozen=True)
class PhasePoint:
    """Phase-space coordinates (z1, z2) and their untwisted images."""

    z1: complex
    z2: complex
    ztilde1: complex
    ztilde2: complex


def orbit_position(orbit: LissajousOrbit, t):
    """(x, y) at time t; t may be an array."""
    cfg = orbit.cfg
    t = np.asarray(t, dtype=float)
    x = orbit.eta1 * np.cos(cfg.q * cfg.omega * t - orbit.phi1)
    y = orbit.eta2 * np.cos(cfg.p * cfg.omega * t - orbit.phi2)
    if t.ndim == 0:
        return (float(x), float(y))
    return (x, y)


def sample_orbit(orbit: LissajousOrbit, n_samples: int):
    """Uniform t samples over one full period (endpoint excluded: the curve
    closes).  Returns (t, points) with points of shape (n_samples, 2)."""
    t = np.arange(n_samples) * (orbit.period / n_samples)
    x, y = orbit_position(orbit, t)
    return t, np.column_stack([x, y])


def orbit_z(orbit: LissajousOrbit, t):
    """Phase-space solution z1 = sqrt(w q/2) eta1 e^{-i(w q t - phi1)} and
    the mode-2 analogue; t may be an array."""
    cfg = orbit.cfg
    t = np.asarray(t, dtype=float)
    z1 = (math.sqrt(cfg.omega * cfg.q / 2.0) * orbit.eta1
          * np.exp(-1j * (cfg.omega * cfg.q * t - orbit.phi1)))
    z2 = (math.sqrt(cfg.omega * cfg.p / 2.0) * orbit.eta2
          * np.exp(-1j * (cfg.omega * cfg.p * t - orbit.phi2)))
    if t.ndim == 0:
        return (complex(z1), complex(z2))
    return (z1, z2)


def phase_trajectory(orbit: LissajousOrbit, t) -> PhasePoint:
    """Phase point with the untwisted coordinates
    z1~ = (z1/|z1|)^p |z1| / sqrt(p), z2~ = (z2/|z2|)^q |z2| / sqrt(q)."""
    cfg = orbit.cfg
    if orbit.eta1 == 0 or orbit.eta2 == 0:
        raise DomainError("degenerate orbit (eta = 0): the untwisted "
                          "coordinates are undefined where z vanishes")
    z1, z2 = orbit_z(orbit, t)
    zt1 = (z1 / np.abs(z1)) ** cfg.p * np.abs(z1) / math.sqrt(cfg.p)
    zt2 = (z2 / np.abs(z2)) ** cfg.q * np.abs(z2) / math.sqrt(cfg.q)
    return PhasePoint(z1=z1, z2=z2, ztilde1=zt1, ztilde2=zt2)


def classical_energy(orbit: LissajousOrbit) -> float:
    """w^2 (q^2 eta1^2 + p^2 eta2^2) / 2; for an orbit built from a coherent
    state this equals w*p*q*(N+1)."""
    cfg = orbit.cfg
    return cfg.omega ** 2 * (cfg.q ** 2 * orbit.eta1 ** 2
                             + cfg.p ** 2 * orbit.eta2 ** 2) / 2.0


def stereographic(jx: float, jy: float, jz: float, j: float) -> complex:
    """Project a point of the radius-j sphere to the plane:
    Z = 2j (jx + i jy) / (j + jz).

    The chart's point at infinity is (0, 0, -j), the image of theta = 0
    (tau = 0).  Under the classical Schwinger map this Z equals
    2j z2~/z1~ identically, and on the sphere point matched to a coherent
    state it equals 2j/tau.
    """
    if j <= 0:
        raise DomainError(f"j must be positive, got {j}")
    r2 = jx * jx + jy * jy + jz * jz
    if abs(r2 - j * j) > 1e-8 * j * j:
        raise DomainError("(jx, jy, jz) does not lie on the radius-j sphere")
    den = j + jz
    if den == 0:
        raise DomainError("(0, 0, -j) is the chart's point at infinity")
    return 2.0 * j * complex(jx, jy) / den


def classical_limit_map(spec: SU2CoherentSpec) -> tuple[float, float, float]:
    """Sphere point (j sin(theta) cos(phi), -j sin(theta) sin(phi),
    -j cos(theta)) targeted by the generator-expectation correspondence."""
    j = spec.j
    return (j * math.sin(spec.theta) * math.cos(spec.phi),
            -j * math.sin(spec.theta) * math.sin(spec.phi),
            -j * math.cos(spec.theta))


def orbits_from_coherent(spec: SU2CoherentSpec,
                         cfg: OscillatorConfig) -> LissajousEnsemble:
    """The M = gcd(p, q) Lissajous orbits matching a coherent state.

    Amplitudes: eta1 = sqrt(2p(N+1)/(q w)) sin(theta/2) and
    eta2 = sqrt(2q(N+1)/(p w)) cos(theta/2) (the sin/cos forms equal
    |tau|/sqrt(1+|tau|^2) and 1/sqrt(1+|tau|^2), and stay exact at the
    poles).  Phases: the gauge phi2 = 0 is fixed, and the Bezout branches
    of p*phi1 - q*phi2 = phi + 2*pi*k give phi1 = (phi + 2*pi*k)/p for
    k = 0..M-1.  Degenerate states (theta = 0 or pi) produce line orbits
    with phi taken as 0 by convention.
    """
    half = 0.5 * spec.theta
    # exact poles: sin(0) is an exact float zero, cos(pi/2) is not
    at_north = spec.theta == 0.0
    at_south = spec.theta == math.pi
    sin_half = 0.0 if at_north else math.sin(half)
    cos_half = 0.0 if at_south else math.cos(half)
    eta1 = math.sqrt(2.0 * cfg.p * (spec.N + 1) / (cfg.q * cfg.omega)) * sin_half
    eta2 = math.sqrt(2.0 * cfg.q * (spec.N + 1) / (cfg.p * cfg.omega)) * cos_half
    phi = 0.0 if (at_north or at_south) else spec.phi
    orbits = tuple(
        LissajousOrbit(eta1=eta1, eta2=eta2,
                       phi1=(phi + 2.0 * math.pi * k) / cfg.p, phi2=0.0, cfg=cfg)
        for k in range(cfg.M))
    return LissajousEnsemble(orbits=orbits, k_labels=tuple(range(cfg.M)))
