"""Concurrence of two initially excited atoms conditioned on the photon count.

Dimensionless throughout: a point is (x, z) with x = r/(ct), z = Omega r/c.
The vacuum channel (no photons) and the two-photon channel are both exposed
per point and as figure-reproducing sweeps.
"""

from .concurrence import TwoQubitState, two_component_concurrence, wootters_concurrence
from .errors import QuadratureError, SingularConfigError, UndefinedStateError
from .kernels import (
    BilinearSet,
    compute_bilinear_set,
    dipole_angular_factor,
    emission_time_integral,
    ordered_emission_kernel,
    spectral_bilinear,
)
from .model import Kinematics, ModelParams, coupling_constant
from .specfun import EiValue, ei_imag, ei_imag_detail, si_ci
from .sweep import SweepSpec, emit_plot_script, preset, run_sweep, to_csv
from .twophoton import (
    TwoPhotonBilinears,
    concurrence_from_bilinears,
    f_bilinears,
    g_bilinears,
    pair_concurrence,
    pair_kernels,
    two_photon_concurrence,
    two_photon_point,
)
from .vacuum import (
    VacuumAmplitudes,
    exchange_amplitude,
    exchange_integral,
    lightcone_integrals,
    radiative_correction,
    vacuum_concurrence,
    vacuum_point,
)

__all__ = [
    "BilinearSet",
    "EiValue",
    "Kinematics",
    "ModelParams",
    "QuadratureError",
    "SingularConfigError",
    "SweepSpec",
    "TwoPhotonBilinears",
    "TwoQubitState",
    "UndefinedStateError",
    "VacuumAmplitudes",
    "compute_bilinear_set",
    "concurrence_from_bilinears",
    "coupling_constant",
    "pair_kernels",
    "dipole_angular_factor",
    "ei_imag",
    "ei_imag_detail",
    "emission_time_integral",
    "emit_plot_script",
    "exchange_amplitude",
    "exchange_integral",
    "f_bilinears",
    "g_bilinears",
    "lightcone_integrals",
    "ordered_emission_kernel",
    "pair_concurrence",
    "preset",
    "radiative_correction",
    "run_sweep",
    "si_ci",
    "spectral_bilinear",
    "to_csv",
    "two_component_concurrence",
    "two_photon_concurrence",
    "two_photon_point",
    "vacuum_concurrence",
    "vacuum_point",
    "wootters_concurrence",
]
