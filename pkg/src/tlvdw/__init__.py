"""TEM-mode-mediated van der Waals / Casimir interactions on transmission lines."""

from .specfun import SpecFunResult, si, ci, sici, ei_imag, k0, EULER_GAMMA
from .quadrature import (
    QuadratureSpec,
    QuadratureResult,
    integrate_damped,
    integrate_oscillatory_regularized,
)
from .core import (
    Transition,
    DipoleSpec,
    TLGeometry,
    PotentialCurve,
    CurveMethod,
    CurveUnits,
    NonConvergenceError,
    f_two_level,
    f_asymptotic_short,
    f_asymptotic_long,
    f_pair,
    f_pair_degenerate,
    alpha_imaginary,
    u_multilevel,
    u_wick,
    u_oscillatory,
    u_freespace_short,
    u_freespace_cp,
    enhancement_ratio,
)
from .mirror1d import (
    ReflectivityModel,
    casimir_force_1d,
    casimir_energy_weak,
    casimir_energy_1d,
    scaling_exponent,
)
from .modes import (
    CoaxGeometry,
    ModeCutoff,
    coax_effective_area,
    mode_envelope,
    tem_dominance_crossover,
    approx_coax_cutoffs,
)
from .estimator import (
    CircuitParams,
    ShiftPrediction,
    DetectabilityVerdict,
    prefactor_from_coupling,
    prefactor_via_dipole_chain,
    shift_at,
    detectability,
    rate_from_dephasing_time,
)

__version__ = "0.1.0"
