"""Quantum Otto cycle on the transverse-field Ising chain.

Per-site energies throughout, with k_B = hbar = 1.
"""

from ._core import (
    BracketFailure,
    ConfigError,
    DimensionCap,
    DomainError,
    Error,
    NoPeak,
    QuadratureFailure,
    brute_force_cycle,
    carnot_point,
    entropy,
    equal_magnetization_temperature,
    finite_cycle,
    free_energy,
    infinitesimal_cycle,
    internal_energy,
    magnetization,
    omega,
    peak_temperature,
    refrigerator_window,
    sweep,
    w_zero_curve,
)

__all__ = [
    "BracketFailure",
    "ConfigError",
    "DimensionCap",
    "DomainError",
    "Error",
    "NoPeak",
    "QuadratureFailure",
    "brute_force_cycle",
    "carnot_point",
    "entropy",
    "equal_magnetization_temperature",
    "finite_cycle",
    "free_energy",
    "infinitesimal_cycle",
    "internal_energy",
    "magnetization",
    "omega",
    "peak_temperature",
    "refrigerator_window",
    "sweep",
    "w_zero_curve",
]
