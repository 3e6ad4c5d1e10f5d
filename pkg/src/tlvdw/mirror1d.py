"""Casimir interaction of two reflectivity-characterized scatterers in 1d.

Natural units (hbar = c = 1).  A scatterer is summarized by its reflection
coefficient on the imaginary frequency axis, r(iu), which is real for the
lossless models used here.  Sign conventions are physical: energies and
forces of attracting pairs are negative; the weak-scatterer energy magnitude
for constant reflectivity is r0^2/(4 pi z).

A point dipole behaves as a weak mirror with r(iu) proportional to
-u * alpha(iu); the proportionality constant is not derivable from scaling
alone, so :meth:`ReflectivityModel.calibrated_dipole` fixes it by matching
the dipole-pair energy route at one reference distance.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import DipoleSpec, TLGeometry, alpha_imaginary, u_wick, NonConvergenceError
from .quadrature import QuadratureSpec, integrate_damped

__all__ = [
    "ReflectivityModel",
    "casimir_force_1d",
    "casimir_energy_weak",
    "casimir_energy_1d",
    "scaling_exponent",
]


@dataclass(frozen=True)
class ReflectivityModel:
    """Frequency-dependent 1d reflection coefficient r(iu).

    kinds:
      ``constant``   r(iu) = r0
      ``power_law``  r(iu) = r0 (u/cutoff_u)^p exp(-u/cutoff_u); the cutoff
                     keeps the weak-energy integral finite without touching
                     the u -> 0 exponent that sets the retarded scaling
      ``dipole``     r(iu) = -dipole_scale * u * alpha(iu)
    """

    kind: str
    r0: float = 1.0
    exponent_p: float = 0.0
    cutoff_u: float = 1.0
    dipole_ref: DipoleSpec | None = None
    dipole_scale: float = 1.0

    def __post_init__(self):
        if self.kind not in ("constant", "power_law", "dipole"):
            raise ValueError(f"unknown reflectivity kind {self.kind!r}")
        if self.exponent_p < 0.0:
            raise ValueError("exponent_p must be >= 0")
        if self.kind == "power_law" and self.cutoff_u <= 0.0:
            raise ValueError("power_law model needs cutoff_u > 0")
        if self.kind == "dipole" and self.dipole_ref is None:
            raise ValueError("dipole model needs dipole_ref")

    def r_imag(self, u):
        """r(iu); accepts scalars or arrays."""
        u = np.asarray(u, dtype=float)
        if self.kind == "constant":
            out = np.full_like(u, self.r0)
        elif self.kind == "power_law":
            t = u / self.cutoff_u
            out = self.r0 * t ** self.exponent_p * np.exp(-t)
        else:
            out = -self.dipole_scale * u * alpha_imaginary(self.dipole_ref, u)
        if out.ndim == 0:
            return float(out)
        return out

    def validate_passivity(self, u_grid) -> None:
        """Raise if |r(iu)| exceeds 1 anywhere on the sampled grid."""
        r = np.atleast_1d(self.r_imag(u_grid))
        if np.any(np.abs(r) > 1.0 + 1e-12):
            raise ValueError(
                f"reflectivity model violates |r(iu)| <= 1 on the sampled grid "
                f"(max {np.max(np.abs(r)):.3g})")

    @classmethod
    def calibrated_dipole(cls, dipole: DipoleSpec, geom: TLGeometry,
                          z_ref: float, spec: QuadratureSpec | None = None
                          ) -> "ReflectivityModel":
        """Dipole-kind model with the scale fixed against the pair-energy route.

        The scale is chosen so that the weak-scatterer mirror energy of two
        such dipoles equals ``u_wick`` at ``z_ref``; the constant is
        calibration, not derivation.
        """
        trial = cls(kind="dipole", dipole_ref=dipole, dipole_scale=1.0)
        u_target = u_wick(dipole, dipole, geom, z_ref, spec)
        u_trial = casimir_energy_weak(trial, trial, z_ref, spec, weak_warn=False)
        scale = math.sqrt(u_target / u_trial)
        return cls(kind="dipole", dipole_ref=dipole, dipole_scale=scale)


def _check_z(z: float):
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")


def casimir_force_1d(r1: ReflectivityModel, r2: ReflectivityModel, z: float,
                     spec: QuadratureSpec | None = None) -> float:
    """Casimir force between two 1d mirrors; negative = attraction.

    Imaginary-axis form of the round-trip kernel:
    f(z) = -(1/pi) int_0^inf du u R(u) e^{-2uz} / (1 - R(u) e^{-2uz}),
    with R = r1(iu) r2(iu).
    """
    _check_z(z)
    if spec is None:
        spec = QuadratureSpec(rel_tol=1e-10, abs_tol=1e-16)
    probe = np.logspace(-6, 3, 40)
    rr = np.atleast_1d(r1.r_imag(probe)) * np.atleast_1d(r2.r_imag(probe))
    if np.any(np.abs(rr * np.exp(-2.0 * z * probe)) >= 1.0):
        raise ValueError("|r1 r2 e^{-2uz}| >= 1 on the contour: round-trip "
                         "denominator would vanish")

    def integrand(u):
        rexp = r1.r_imag(u) * r2.r_imag(u) * np.exp(-2.0 * z * u)
        return u * rexp / (1.0 - rexp)

    res = integrate_damped(integrand, spec)
    if not res.converged:
        raise NonConvergenceError(f"mirror force quadrature failed at z = {z}")
    return -res.value / math.pi


def casimir_energy_weak(r1: ReflectivityModel, r2: ReflectivityModel, z: float,
                        spec: QuadratureSpec | None = None,
                        weak_warn: bool = True) -> float:
    """Weak-scatterer energy -(1/2pi) int_0^inf du r1(iu) r2(iu) e^{-2uz}.

    Negative (attractive) for reflectivities of equal sign; magnitude
    r0^2/(4 pi z) for constant models.  Warns when the scatterers are not
    actually weak (max sampled |r1 r2| >= 0.1).
    """
    _check_z(z)
    if spec is None:
        spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-20)
    if weak_warn:
        probe = np.logspace(-6, 3, 40)
        rr = np.atleast_1d(r1.r_imag(probe)) * np.atleast_1d(r2.r_imag(probe))
        if float(np.max(np.abs(rr))) >= 0.1:
            warnings.warn("scatterers are not weak: max sampled |r1 r2| >= 0.1",
                          stacklevel=2)

    def integrand(u):
        return r1.r_imag(u) * r2.r_imag(u) * np.exp(-2.0 * z * u)

    res = integrate_damped(integrand, spec)
    if not res.converged:
        raise NonConvergenceError(f"weak-mirror quadrature failed at z = {z}")
    return -res.value / (2.0 * math.pi)


def casimir_energy_1d(r1: ReflectivityModel, r2: ReflectivityModel, z: float,
                      spec: QuadratureSpec | None = None) -> float:
    """Full round-trip mirror energy (1/2pi) int_0^inf du ln(1 - R(u) e^{-2uz}).

    The derivative -dU/dz reproduces :func:`casimir_force_1d`; for perfect
    mirrors (R = 1) the result is -pi/(24 z).
    """
    _check_z(z)
    if spec is None:
        spec = QuadratureSpec(rel_tol=1e-10, abs_tol=1e-16)

    def integrand(u):
        rexp = r1.r_imag(u) * r2.r_imag(u) * np.exp(-2.0 * z * u)
        return np.log1p(-rexp)

    res = integrate_damped(integrand, spec)
    if not res.converged:
        raise NonConvergenceError(f"mirror energy quadrature failed at z = {z}")
    return res.value / (2.0 * math.pi)


def scaling_exponent(r_model_pair, z_grid, spec: QuadratureSpec | None = None) -> float:
    """Fitted power p_fit with |U| ~ z^-p_fit over the given grid.

    Least-squares slope of log|U| against log z using the weak-scatterer
    energy; the grid must span at least a decade inside the retarded regime
    (z * cutoff_u >> 1 for cutoff-regularized power-law models).
    """
    r1, r2 = r_model_pair
    zs = np.asarray(sorted(float(z) for z in z_grid))
    if zs.size < 2 or zs[-1] / zs[0] < 10.0 - 1e-9:
        raise ValueError("z_grid must span at least one decade")
    u_vals = np.array([casimir_energy_weak(r1, r2, z, spec, weak_warn=False)
                       for z in zs])
    mags = np.abs(u_vals)
    if np.any(mags == 0.0) or np.any(np.diff(mags) >= 0.0):
        raise ValueError("|U| is not strictly decreasing on the grid; "
                         "exponent fit is not meaningful")
    slope, _intercept = np.polyfit(np.log(zs), np.log(mags), 1)
    return -float(slope)
