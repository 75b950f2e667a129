"""Position-space wavefunctions and probability densities on rectangular grids.

Mode 1 (x) eigenfunctions carry frequency q*omega and mode 2 (y) carries
p*omega.  Hermite functions are generated by the normalized three-term
recurrence with the Gaussian factor kept inside; a mantissa/exponent
split keeps the recurrence in range for quantum numbers up to 10000 even
where the bare Gaussian would underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .oscillator import OscillatorConfig
from .su2 import StateVector

_MAX_LEVEL = 10000
_RESCALE_AT = 1e250


@dataclass(frozen=True)
class GridSpec:
    """Uniform rectangular lattice; sample points are cell centers."""

    x_min: float
    x_max: float
    nx: int
    y_min: float
    y_max: float
    ny: int

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise DomainError("grid extents must satisfy min < max")
        if self.nx < 1 or self.ny < 1:
            raise DomainError("grid point counts must be positive")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / self.ny

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    def x_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    def y_centers(self) -> np.ndarray:
        return self.y_min + (np.arange(self.ny) + 0.5) * self.dy


@dataclass(frozen=True)
class DensityField:
    """|psi(x, y)|^2 sampled on a grid; values has shape (ny, nx), y slowest."""

    grid: GridSpec
    values: np.ndarray


def _hermite_recurrence(n_max: int, xi: np.ndarray, keep_all: bool):
    """Normalized Hermite functions psi_n(xi) by the stable recurrence
    psi_{n+1} = xi sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1}.

    Values are carried as mantissa * exp(L): L starts at the log of the
    Gaussian factor (so psi_0 never underflows prematurely) and absorbs
    the mantissa whenever it grows past a threshold.
    """
    L = -0.5 * xi * xi
    m_cur = np.full(xi.shape, math.pi ** -0.25)
    m_prev = np.zeros_like(m_cur)
    expL = np.exp(L)
    if keep_all:
        out = np.empty((n_max + 1,) + xi.shape)
        out[0] = m_cur * expL
    for n in range(n_max):
        c1 = math.sqrt(2.0 / (n + 1))
        c2 = math.sqrt(n / (n + 1))
        m_prev, m_cur = m_cur, c1 * xi * m_cur - c2 * m_prev
        big = np.abs(m_cur) > _RESCALE_AT
        if big.any():
            shift = np.zeros_like(L)
            shift[big] = np.log(np.abs(m_cur[big]))
            factor = np.exp(-shift)
            m_cur = m_cur * factor
            m_prev = m_prev * factor
            L = L + shift
            expL = np.exp(L)
        if keep_all:
            out[n + 1] = m_cur * expL
    return out if keep_all else m_cur * expL


def ho_eigenfunction(n: int, omega_eff: float, x):
    """Normalized 1-D oscillator eigenfunction phi_n(x) at frequency omega_eff.

    phi_n(x) = omega_eff^(1/4) psi_n(sqrt(omega_eff) x) with psi_n the unit
    Hermite function; integral of phi_n^2 over x is 1.
    """
    if n < 0 or n > _MAX_LEVEL:
        raise DomainError(f"n must lie in [0, {_MAX_LEVEL}], got {n}")
    if omega_eff <= 0:
        raise DomainError(f"omega_eff must be positive, got {omega_eff}")
    xi = np.sqrt(omega_eff) * np.asarray(x, dtype=float)
    scalar = xi.ndim == 0
    values = omega_eff ** 0.25 * _hermite_recurrence(n, np.atleast_1d(xi), False)
    return float(values[0]) if scalar else values


def hermite_function_table(n_max: int, omega_eff: float, x) -> np.ndarray:
    """All phi_0..phi_{n_max} at the given points; shape (n_max + 1, len(x))."""
    if n_max < 0 or n_max > _MAX_LEVEL:
        raise DomainError(f"n_max must lie in [0, {_MAX_LEVEL}], got {n_max}")
    if omega_eff <= 0:
        raise DomainError(f"omega_eff must be positive, got {omega_eff}")
    xi = np.sqrt(omega_eff) * np.asarray(x, dtype=float)
    return omega_eff ** 0.25 * _hermite_recurrence(n_max, np.atleast_1d(xi), True)


def evaluate_density(state: StateVector, cfg: OscillatorConfig,
                     grid: GridSpec) -> DensityField:
    """|<x, y|state>|^2 on the grid.

    The basis is separable, so the two 1-D function tables are computed
    once and the amplitude sum is a matrix contraction over the distinct
    occupation numbers of each mode.
    """
    occ = state.occupations
    amps = state.amplitudes
    n1_vals, i1 = np.unique(occ[:, 0], return_inverse=True)
    n2_vals, i2 = np.unique(occ[:, 1], return_inverse=True)
    table1 = hermite_function_table(int(n1_vals.max()), cfg.q * cfg.omega,
                                    grid.x_centers())[n1_vals]
    table2 = hermite_function_table(int(n2_vals.max()), cfg.p * cfg.omega,
                                    grid.y_centers())[n2_vals]
    coeff = np.zeros((n1_vals.size, n2_vals.size), dtype=complex)
    np.add.at(coeff, (i1, i2), amps)
    wave = table1.T @ coeff @ table2          # (nx, ny)
    return DensityField(grid=grid, values=np.abs(wave.T) ** 2)


def integrate(field: DensityField) -> float:
    """Midpoint Riemann sum of the density over the grid."""
    return float(field.values.sum() * field.grid.cell_area)


def default_grid(ensemble, nx: int = 512, ny: int = 512) -> GridSpec:
    """Square grid covering the classically allowed region plus tails:
    half-width 1.25 * max(eta1, eta2) + 4/sqrt(min(p, q) * omega)."""
    cfg = ensemble.orbits[0].cfg
    amp = max(max(o.eta1, o.eta2) for o in ensemble.orbits)
    half = 1.25 * amp + 4.0 / math.sqrt(min(cfg.p, cfg.q) * cfg.omega)
    return GridSpec(-half, half, nx, -half, half, ny)
