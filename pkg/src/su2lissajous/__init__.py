"""SU(2) coherent states of the commensurate anisotropic 2-D oscillator
and their classical Lissajous orbit ensembles."""

from .errors import DomainError
from .localization import (TubeReport, default_epsilon, glauber_trajectory_check,
                           localization_scan, mean_ground_width, tube_mass)
from .orbits import (LissajousEnsemble, LissajousOrbit, PhasePoint,
                     classical_energy, classical_limit_map, orbit_position,
                     orbit_z, orbits_from_coherent, phase_trajectory,
                     sample_orbit, stereographic)
from .oscillator import (BezoutSolution, OscillatorConfig, SubspaceBasis,
                         energy_of_state, enumerate_subspace, gcd_bezout,
                         subspace_energy)
from .su2 import (SU2CoherentSpec, SU2Generators, StateVector, TruncatedFock,
                  build_generators, build_glauber, build_su2_coherent,
                  coherent_amplitudes, decompose_glauber_su2,
                  evolve_expectations, j_expectations)
from .wavefield import (DensityField, GridSpec, default_grid, evaluate_density,
                        hermite_function_table, ho_eigenfunction, integrate)

__version__ = "0.1.0"

__all__ = [
    "BezoutSolution", "DensityField", "DomainError", "GridSpec",
    "LissajousEnsemble", "LissajousOrbit", "OscillatorConfig", "PhasePoint",
    "SU2CoherentSpec", "SU2Generators", "StateVector", "SubspaceBasis",
    "TruncatedFock", "TubeReport", "build_generators", "build_glauber",
    "build_su2_coherent", "classical_energy", "classical_limit_map",
    "coherent_amplitudes", "decompose_glauber_su2", "default_epsilon",
    "default_grid", "energy_of_state", "enumerate_subspace",
    "evaluate_density", "evolve_expectations", "gcd_bezout",
    "glauber_trajectory_check", "hermite_function_table", "ho_eigenfunction",
    "integrate", "j_expectations", "localization_scan", "mean_ground_width",
    "orbit_position", "orbit_z", "orbits_from_coherent", "phase_trajectory",
    "sample_orbit", "stereographic", "subspace_energy", "tube_mass",
]
