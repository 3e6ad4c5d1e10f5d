"""Transmission-line geometry services.

Effective TEM mode area of a coaxial line, interaction envelopes of the
higher transverse (TE/TM) modes, and the distance beyond which the TEM mode
alone carries the interaction.  Lengths here share one unit (use the dominant
transition wavelength when combining with :mod:`tlvdw.core`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import f_two_level
from .specfun import k0

__all__ = [
    "CoaxGeometry",
    "ModeCutoff",
    "coax_effective_area",
    "mode_envelope",
    "tem_dominance_crossover",
    "approx_coax_cutoffs",
]


@dataclass(frozen=True)
class CoaxGeometry:
    """Coaxial line: inner conductor radius a, outer radius b, dipole at rho."""

    inner_radius_a: float
    outer_radius_b: float
    dipole_radius_rho: float

    def __post_init__(self):
        a, b, rho = self.inner_radius_a, self.outer_radius_b, self.dipole_radius_rho
        if not (math.isfinite(a) and a > 0.0):
            raise ValueError(f"inner radius must be > 0, got {a!r}")
        if not (b > a):
            raise ValueError(f"outer radius must exceed inner radius, got b={b!r}, a={a!r}")
        if not (a < rho < b):
            raise ValueError(f"dipole radius must lie strictly between the conductors, "
                             f"got rho={rho!r} with a={a!r}, b={b!r}")


@dataclass(frozen=True)
class ModeCutoff:
    """A TE/TM transverse mode and its cutoff wavenumber."""

    kind: str
    indices: tuple
    cutoff_wavenumber: float

    def __post_init__(self):
        if self.kind not in ("TE", "TM"):
            raise ValueError(f"kind must be 'TE' or 'TM', got {self.kind!r}")
        l, m = self.indices
        if l < 0 or m < 1:
            raise ValueError(f"mode indices need l >= 0, m >= 1, got {self.indices!r}")
        if not (math.isfinite(self.cutoff_wavenumber) and self.cutoff_wavenumber > 0.0):
            raise ValueError("cutoff_wavenumber must be positive and finite")

    def validate_bound(self, max_transverse_dimension: float) -> None:
        """Check the cutoff bound k > pi / (largest transverse dimension)."""
        if self.cutoff_wavenumber <= math.pi / max_transverse_dimension:
            raise ValueError(
                f"cutoff {self.cutoff_wavenumber:.4g} violates the bound "
                f"k > pi/{max_transverse_dimension:.4g}")


def coax_effective_area(geom: CoaxGeometry) -> float:
    """Effective TEM area A = 2 pi ln(b/a) rho^2 of a coaxial line."""
    return (2.0 * math.pi
            * math.log(geom.outer_radius_b / geom.inner_radius_a)
            * geom.dipole_radius_rho ** 2)


def approx_coax_cutoffs(geom: CoaxGeometry, n_tm: int = 1) -> list:
    """Standard engineering approximations for the lowest coax cutoffs.

    TE11: k ~ 2/(a+b); TM0m: k ~ m pi/(b-a).  Approximate only — exact values
    need Bessel-root solving and must be supplied by the caller when they
    matter.
    """
    a, b = geom.inner_radius_a, geom.outer_radius_b
    cut = [ModeCutoff("TE", (1, 1), 2.0 / (a + b))]
    for m in range(1, n_tm + 1):
        cut.append(ModeCutoff("TM", (0, m), m * math.pi / (b - a)))
    return cut


def mode_envelope(cutoff: ModeCutoff, z: float) -> float:
    """Relative interaction strength of one transverse mode at distance z.

    K0(k z) for TE modes, exp(-k z) for TM modes; unit amplitude at the
    cutoff scale, strictly decreasing in z.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")
    arg = cutoff.cutoff_wavenumber * z
    if cutoff.kind == "TE":
        if arg > 700.0:
            return 0.0
        return k0(arg).value
    return math.exp(-arg) if arg < 745.0 else 0.0


def tem_dominance_crossover(cutoffs, xi_grid, threshold: float = 0.01,
                            wavelength: float = 1.0) -> float:
    """Smallest grid distance beyond which the TEM mode alone suffices.

    Sums the TE/TM envelopes at each z = xi * wavelength on the grid and
    returns the first z where that sum drops below threshold times the
    two-level TEM potential F(xi).  The result is floored at pi/max(k), the
    transverse scale implied by the cutoff bound, below which free-space
    behavior takes over anyway.
    """
    cutoffs = list(cutoffs)
    if not cutoffs:
        raise ValueError("need at least one mode cutoff")
    floor = math.pi / max(c.cutoff_wavenumber for c in cutoffs)
    for xi in sorted(float(x) for x in xi_grid):
        z = xi * wavelength
        if z <= 0.0:
            continue
        envelope = sum(mode_envelope(c, z) for c in cutoffs)
        if envelope < threshold * f_two_level(xi):
            return max(z, floor)
    raise ValueError("grid exhausted: envelopes never dropped below "
                     f"threshold = {threshold} times the TEM potential")
