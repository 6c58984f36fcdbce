"""Kicked nonlinear oscillator: quantum and classical dynamics toolkit."""

__version__ = "0.1.0"

from .params import MapParams
from .fock import (FockBasis, QuantumState, Operator, coherent_state,
                   number_operator, nonlinear_operator, squeeze_generator,
                   expm_unitary, unitarity_defect)
from .quantum import (KickPropagator, Trajectory, FloquetSpectrum, build_kick,
                      evolve, mean_number, number_distribution, mean_quadratures,
                      ground_state_probability, floquet_analysis)
from .classical import (ClassicalPoint, Ensemble, EnergyTrace, PoincareSection,
                        classical_kick, jacobian, gaussian_ensemble,
                        ensemble_energy_trace, poincare_section, grid_points)
from .stability import (Stability, FixedPointRecord, BifurcationCurve, RegionLabel,
                        origin_stability, find_period1_orbits, bifurcation_curves,
                        label_region, default_r_sq_max)
from .ions import (IonParams, CarrierMap, RamanMap, carrier_to_map, raman_to_map,
                   required_carrier_time)
from .errors import (KisError, ConfigError, NumericError, BasisTooSmall,
                     TruncationOverflow, ConvergenceFailure, NoConvergence,
                     EigensolverFailure, DomainError)

__all__ = [
    "MapParams",
    "FockBasis", "QuantumState", "Operator", "coherent_state",
    "number_operator", "nonlinear_operator", "squeeze_generator",
    "expm_unitary", "unitarity_defect",
    "KickPropagator", "Trajectory", "FloquetSpectrum", "build_kick", "evolve",
    "mean_number", "number_distribution", "mean_quadratures",
    "ground_state_probability", "floquet_analysis",
    "ClassicalPoint", "Ensemble", "EnergyTrace", "PoincareSection",
    "classical_kick", "jacobian", "gaussian_ensemble", "ensemble_energy_trace",
    "poincare_section", "grid_points",
    "Stability", "FixedPointRecord", "BifurcationCurve", "RegionLabel",
    "origin_stability", "find_period1_orbits", "bifurcation_curves",
    "label_region", "default_r_sq_max",
    "IonParams", "CarrierMap", "RamanMap", "carrier_to_map", "raman_to_map",
    "required_carrier_time",
    "KisError", "ConfigError", "NumericError", "BasisTooSmall",
    "TruncationOverflow", "ConvergenceFailure", "NoConvergence",
    "EigensolverFailure", "DomainError",
    "__version__",
]
