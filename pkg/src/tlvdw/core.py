"""TEM-mediated dipole-dipole interaction energies along a transmission line.

Natural units are used throughout (hbar = c = 1): energies and wavenumbers
coincide, wavelengths are 2*pi/E.  Choose the first transition's wavelength
as the length scale and every result below is dimensionless; SI conversion
lives in :mod:`tlvdw.estimator` and the CLI layer.

Route map:

* ``f_two_level`` — closed-form dimensionless potential F for a dominant
  transition; equals ``2*(f(x) - x*g(x))`` with ``x = 4*pi*z/lambda`` in
  terms of the Si/Ci auxiliary pair, which is the cancellation-free form.
* ``f_pair`` — the two-transition generalization ``F(xi, b)``; reduces to
  ``(4b/(b^2-1)) * (b*f(b*x) - f(x))``.
* ``u_multilevel`` — double sum of pair terms over both level ladders.
* ``u_wick`` / ``u_oscillatory`` — the scattering-route energies on the
  imaginary / real wavenumber axis; both must agree with ``u_multilevel``.
* free-space comparators and the enhancement ratio for the figure-of-merit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .quadrature import (
    QuadratureSpec,
    QuadratureResult,
    integrate_damped,
    integrate_oscillatory_regularized,
)
from .specfun import EULER_GAMMA, SICI_SWITCH, _sici_series, _sici_large

__all__ = [
    "Transition", "DipoleSpec", "TLGeometry", "PotentialCurve",
    "CurveMethod", "CurveUnits", "NonConvergenceError",
    "f_two_level", "f_asymptotic_short", "f_asymptotic_long",
    "f_pair", "f_pair_degenerate",
    "alpha_imaginary", "u_multilevel", "u_wick", "u_oscillatory",
    "u_freespace_short", "u_freespace_cp", "enhancement_ratio",
    "DEGENERATE_B_DELTA",
]

TWO_PI = 2.0 * math.pi

# |b - 1| below this goes through the two-sided extrapolation path; the
# (b^2 - 1) denominator of the pair formula loses ~8 digits there.
DEGENERATE_B_DELTA = 1e-4

# width (relative) by which transition poles are pushed below the real axis
# in the real-axis route; the leading bias is imaginary, so the energy picks
# up only an O(width^2) error.
POLE_PUSH_EPSILON = 1e-6


class NonConvergenceError(RuntimeError):
    """A quadrature engine failed to meet its tolerance."""


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Transition:
    """One ground-to-excited dipole transition.

    ``dipole_moment_sq_perp`` is |d_perp|^2, the squared transverse projection
    of the matrix element, which is what couples to the TEM mode.
    """

    dipole_moment_sq_perp: float
    energy: float
    wavelength: float = None
    wavenumber: float = None

    def __post_init__(self):
        if not (math.isfinite(self.energy) and self.energy > 0.0):
            raise ValueError(f"transition energy must be > 0, got {self.energy!r}")
        if not (math.isfinite(self.dipole_moment_sq_perp)
                and self.dipole_moment_sq_perp > 0.0):
            raise ValueError("dipole_moment_sq_perp must be > 0")
        if self.wavenumber is None:
            object.__setattr__(self, "wavenumber", self.energy)
        if self.wavelength is None:
            object.__setattr__(self, "wavelength", TWO_PI / self.wavenumber)
        if abs(self.wavelength * self.wavenumber - TWO_PI) > 1e-12 * TWO_PI:
            raise ValueError("wavelength * wavenumber must equal 2*pi")


@dataclass(frozen=True)
class DipoleSpec:
    """A polarizable dipole as a set of transitions.

    ``isotropic_factor`` is the assumed |d_perp|^2 / |d|^2 ratio (2/3 for an
    isotropically averaged dipole); it only matters when converting to the
    full moment, e.g. in the free-space comparators.
    """

    transitions: tuple
    isotropic_factor: float = 2.0 / 3.0

    def __post_init__(self):
        trs = tuple(self.transitions)
        if len(trs) == 0:
            raise ValueError("DipoleSpec needs at least one transition")
        object.__setattr__(self, "transitions", trs)
        if not (0.0 < self.isotropic_factor <= 1.0):
            raise ValueError("isotropic_factor must lie in (0, 1]")

    @classmethod
    def two_level(cls, energy: float, dipole_moment_sq_perp: float = 1.0,
                  isotropic_factor: float = 2.0 / 3.0) -> "DipoleSpec":
        return cls((Transition(dipole_moment_sq_perp, energy),), isotropic_factor)

    def single(self) -> Transition:
        if len(self.transitions) != 1:
            raise ValueError("operation requires a two-level (single-transition) dipole")
        return self.transitions[0]


@dataclass(frozen=True)
class TLGeometry:
    """Effective TEM data of the line at the two dipole positions."""

    area_1: float
    area_2: float
    permittivity: float = 1.0
    phase_velocity: float = 1.0

    def __post_init__(self):
        for name in ("area_1", "area_2", "permittivity", "phase_velocity"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")


class CurveMethod(str, Enum):
    closed_form = "closed_form"
    asymptotic_short = "asymptotic_short"
    asymptotic_long = "asymptotic_long"
    pair_sum = "pair_sum"
    wick = "wick"
    oscillatory = "oscillatory"
    freespace_vdw = "freespace_vdw"
    freespace_cp = "freespace_cp"


class CurveUnits(str, Enum):
    dimensionless_F = "dimensionless_F"
    energy = "energy"
    ratio = "ratio"


@dataclass(frozen=True)
class PotentialCurve:
    """A sampled U(z) or F(z) curve with provenance metadata."""

    method: CurveMethod
    samples: tuple
    units: CurveUnits

    def __post_init__(self):
        samples = tuple((float(z), float(v)) for z, v in self.samples)
        zs = [z for z, _ in samples]
        if any(b <= a for a, b in zip(zs, zs[1:])):
            raise ValueError("samples must be sorted by strictly increasing z")
        object.__setattr__(self, "samples", samples)


# ---------------------------------------------------------------------------
# the dimensionless potential and its limits


def _aux_f(x: float) -> float:
    """Auxiliary f(x) = Ci(x) sin(x) + (pi/2 - Si(x)) cos(x), any x > 0."""
    if x < SICI_SWITCH:
        s, c, _ = _sici_series(x)
        return c * math.sin(x) + (math.pi / 2 - s) * math.cos(x)
    _s, _c, f, _g, _e = _sici_large(x)
    return f


def _aux_fg(x: float) -> tuple[float, float]:
    if x < SICI_SWITCH:
        s, c, _ = _sici_series(x)
        f = c * math.sin(x) + (math.pi / 2 - s) * math.cos(x)
        g = (math.pi / 2 - s) * math.sin(x) - c * math.cos(x)
        return f, g
    _s, _c, f, g, _e = _sici_large(x)
    return f, g


def _f_series_large(x: float) -> float:
    """F(xi) for large x = 4*pi*xi by its own alternating asymptotic series.

    F = sum_{n>=1} (-1)^(n+1) * 4n * (2n)! / x^(2n+1); truncated at the
    smallest term (error below 1e-40 for x >= 100).
    """
    total = 0.0
    term = 8.0 / x ** 3     # n = 1
    n = 1
    prev = math.inf
    while abs(term) < prev and abs(term) > 1e-40 * max(abs(total), 1e-300):
        total += term
        prev = abs(term)
        n += 1
        term *= -(2 * n) * (2 * n - 1) / (x * x) * (n / (n - 1.0))
    return total


def f_two_level(xi: float) -> float:
    """Dimensionless potential F(xi), xi = z / lambda_e, for a two-level dipole.

    Positive, strictly decreasing; F -> pi as xi -> 0 and
    F -> 1/(8 pi^3 xi^3) as xi -> infinity.
    """
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"xi must be finite and > 0, got {xi!r}")
    x = 2.0 * TWO_PI * xi
    if x >= 100.0:
        return _f_series_large(x)
    f, g = _aux_fg(x)
    return 2.0 * (f - x * g)


def f_asymptotic_short(xi: float) -> float:
    """Short-distance series pi + 16 pi xi ln xi + 8 pi (2 gamma - 1 + 2 ln 4 pi) xi."""
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"xi must be finite and > 0, got {xi!r}")
    if xi >= 0.1:
        warnings.warn("short-distance series called outside its validity window xi < 0.1",
                      stacklevel=2)
    return (math.pi + 16.0 * math.pi * xi * math.log(xi)
            + 8.0 * math.pi * (2.0 * EULER_GAMMA - 1.0 + 2.0 * math.log(2.0 * TWO_PI)) * xi)


def f_asymptotic_long(xi: float) -> float:
    """Retarded-regime form 1 / (8 pi^3 xi^3)."""
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"xi must be finite and > 0, got {xi!r}")
    if xi < 3.0:
        warnings.warn("long-distance form called below xi = 3 where corrections are sizable",
                      stacklevel=2)
    return 1.0 / (8.0 * math.pi ** 3 * xi ** 3)


def f_pair(xi: float, b: float, delta: float = DEGENERATE_B_DELTA) -> float:
    """Pair potential F(xi, b) for transitions with energy ratio b = E2/E1.

    Equals (4b/(b^2-1)) * (b f(b x) - f(x)) with x = 4 pi xi; use
    :func:`f_pair_degenerate` for |b - 1| < delta.
    """
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"xi must be finite and > 0, got {xi!r}")
    if not (math.isfinite(b) and b > 0.0):
        raise ValueError(f"b must be finite and > 0, got {b!r}")
    if abs(b - 1.0) < delta:
        raise ValueError(
            f"|b - 1| = {abs(b - 1.0):.3g} < delta = {delta:.3g}: "
            "use f_pair_degenerate for the near-degenerate path")
    x = 2.0 * TWO_PI * xi
    return 4.0 * b / (b * b - 1.0) * (b * _aux_f(b * x) - _aux_f(x))


def f_pair_degenerate(xi: float, b: float = 1.0,
                      delta: float = DEGENERATE_B_DELTA) -> float:
    """b -> 1 limit path: two-sided evaluation at b = 1 +/- delta with linear
    interpolation to the requested b.  Agrees with ``f_two_level`` at b = 1."""
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"xi must be finite and > 0, got {xi!r}")
    if abs(b - 1.0) >= delta:
        raise ValueError(
            f"|b - 1| = {abs(b - 1.0):.3g} >= delta = {delta:.3g}: use f_pair")
    lo, hi = 1.0 - delta, 1.0 + delta
    f_lo = f_pair(xi, lo, delta=0.5 * delta)
    f_hi = f_pair(xi, hi, delta=0.5 * delta)
    return f_lo + (f_hi - f_lo) * (b - lo) / (hi - lo)


def _f_pair_any(xi: float, b: float) -> float:
    if abs(b - 1.0) < DEGENERATE_B_DELTA:
        return f_pair_degenerate(xi, b)
    return f_pair(xi, b)


# ---------------------------------------------------------------------------
# polarizability and the three energy routes


def alpha_imaginary(dipole: DipoleSpec, u):
    """Transverse-coupled polarizability on the imaginary axis, alpha(iu).

    Returns sum_n E_n |d_perp_n|^2 / (E_n^2 + u^2); under the isotropic
    assumption |d_perp|^2 = (2/3)|d|^2 this is the standard
    (2/3) sum_n E_n |d_n|^2 / (E_n^2 + u^2).  Accepts scalars or arrays.
    """
    u2 = np.square(np.asarray(u, dtype=float))
    out = np.zeros_like(u2)
    for tr in dipole.transitions:
        out += tr.dipole_moment_sq_perp * tr.energy / (tr.energy ** 2 + u2)
    if np.ndim(u) == 0:
        return float(out)
    return out


def _alpha_complex(dipole: DipoleSpec, k: np.ndarray, pole_eps: float) -> np.ndarray:
    """alpha(k) on the real axis with poles pushed below it, E -> E(1 - i eps)."""
    k2 = np.square(np.asarray(k, dtype=float))
    out = np.zeros(k2.shape, dtype=complex)
    for tr in dipole.transitions:
        e = tr.energy * (1.0 - 1j * pole_eps)
        out += tr.dipole_moment_sq_perp * e / (e * e - k2)
    return out


def u_multilevel(dipole_1: DipoleSpec, dipole_2: DipoleSpec,
                 geom: TLGeometry, z: float) -> float:
    """Pair-sum route: the double sum over both transition ladders.

    Each (n1, n2) term carries -pi |d1|^2 |d2|^2 / (2 eps^2 A1 A2 lam1^2 E1)
    times F(z/lam1, E2/E1); strictly negative.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    eps2 = geom.permittivity ** 2
    total = 0.0
    for t1 in dipole_1.transitions:
        for t2 in dipole_2.transitions:
            pref = (math.pi * t1.dipole_moment_sq_perp * t2.dipole_moment_sq_perp
                    / (2.0 * eps2 * geom.area_1 * geom.area_2
                       * t1.wavelength ** 2 * t1.energy))
            total -= pref * _f_pair_any(z / t1.wavelength, t2.energy / t1.energy)
    return total


def u_wick(dipole_1: DipoleSpec, dipole_2: DipoleSpec, geom: TLGeometry,
           z: float, spec: QuadratureSpec | None = None) -> float:
    """Scattering route on the imaginary axis (exponentially damped integral)."""
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    if spec is None:
        spec = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-30)

    def integrand(u):
        return (alpha_imaginary(dipole_1, u) * alpha_imaginary(dipole_2, u)
                * u * u * np.exp(-2.0 * z * u))

    res = integrate_damped(integrand, spec)
    if not res.converged:
        raise NonConvergenceError(
            f"u_wick quadrature did not converge at z = {z}: est_error = {res.est_error:.3g}")
    pref = 1.0 / (2.0 * math.pi * geom.permittivity ** 2 * geom.area_1 * geom.area_2)
    return -pref * res.value


def u_oscillatory(dipole_1: DipoleSpec, dipole_2: DipoleSpec, geom: TLGeometry,
                  z: float, spec: QuadratureSpec | None = None,
                  eta_sequence=None, pole_eps: float = POLE_PUSH_EPSILON) -> float:
    """Scattering route on the real axis, regularized.

    Transition poles are pushed below the axis by E -> E(1 - i pole_eps); the
    conditionally convergent k-integral is evaluated under exp(-eta k) for a
    decreasing eta sequence and extrapolated to eta -> 0.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    energies = sorted({t.energy for t in dipole_1.transitions}
                      | {t.energy for t in dipole_2.transitions})
    k_scale = max(energies)
    if eta_sequence is None:
        eta_sequence = [0.1 * k_scale * 0.5 ** j for j in range(6)]
    # panel edges clustered geometrically into each pole, down to the push width
    bps = []
    for e in energies:
        w = 0.4 * e
        while w > 0.2 * pole_eps * e:
            bps.extend((e - w, e + w))
            w /= 3.0
        bps.append(e)
    if spec is None:
        spec = QuadratureSpec(rel_tol=1e-8, abs_tol=1e-30)
    spec = QuadratureSpec(
        rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
        max_subdivisions=max(spec.max_subdivisions, 400),
        regulator_eta=spec.regulator_eta,
        breakpoints=tuple(sorted(b for b in bps if b > 0.0)),
        period_hint=math.pi / z)

    def integrand(k):
        k = np.asarray(k, dtype=float)
        prod = (_alpha_complex(dipole_1, k, pole_eps)
                * _alpha_complex(dipole_2, k, pole_eps))
        return prod.real * k * k * np.sin(2.0 * k * z)

    res = integrate_oscillatory_regularized(integrand, spec, eta_sequence)
    if not res.converged:
        raise NonConvergenceError(
            f"u_oscillatory regularization did not converge at z = {z}: "
            f"est_error = {res.est_error:.3g}")
    pref = 1.0 / (2.0 * math.pi * geom.permittivity ** 2 * geom.area_1 * geom.area_2)
    return pref * res.value


# ---------------------------------------------------------------------------
# free-space comparators and the enhancement ratio


def u_freespace_short(dipole: DipoleSpec, z: float,
                      permittivity: float = 1.0) -> float:
    """Free-space van der Waals energy -|d|^4 / (48 pi^2 eps^2 E z^6)."""
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    tr = dipole.single()
    d4 = (tr.dipole_moment_sq_perp / dipole.isotropic_factor) ** 2
    return -d4 / (48.0 * math.pi ** 2 * permittivity ** 2 * tr.energy * z ** 6)


def u_freespace_cp(dipole: DipoleSpec, z: float,
                   permittivity: float = 1.0) -> float:
    """Free-space Casimir-Polder energy -(23/64 pi^3)(4/9)(|d|^4/E^2) z^-7."""
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    tr = dipole.single()
    d4 = (tr.dipole_moment_sq_perp / dipole.isotropic_factor) ** 2
    return -(23.0 / (64.0 * math.pi ** 3)) * (4.0 / 9.0) * d4 \
        / (permittivity ** 2 * tr.energy ** 2 * z ** 7)


def enhancement_ratio(dipole: DipoleSpec, geom: TLGeometry, z: float,
                      regime: str) -> float:
    """Ratio of the TEM-mediated energy to the free-space comparator.

    Positive (both attractive); ``regime`` picks the z^-6 van der Waals or the
    z^-7 Casimir-Polder comparator.  The permittivity cancels.
    """
    if regime not in ("short", "long"):
        raise ValueError(f"regime must be 'short' or 'long', got {regime!r}")
    tr = dipole.single()
    xi = z / tr.wavelength
    u_tl = -(math.pi * tr.dipole_moment_sq_perp ** 2
             / (2.0 * geom.area_1 * geom.area_2 * tr.wavelength ** 2 * tr.energy)
             ) * f_two_level(xi)
    if regime == "short":
        u_fs = u_freespace_short(dipole, z)
    else:
        u_fs = u_freespace_cp(dipole, z)
    return u_tl / u_fs
