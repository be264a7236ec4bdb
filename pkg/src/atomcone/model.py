"""Dimensionless parameterization shared by all channels.

Everything downstream is a function of the point (x, z) with

    x = r / (c t)       light-cone coordinate (x > 1: spacelike),
    z = Omega r / c     separation in units of the transition wavelength,

plus two dimensionless constants: the dipole strength D = Omega|d|/(e c)
and the fine-structure constant alpha.  No SI quantities appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

FINE_STRUCTURE = 7.2973525693e-3

# Evaluators treat x == 1.0 as the limit from inside the cone, displaced by
# this amount.  Points within ON_CONE_WINDOW of the cone are flagged in
# output metadata but evaluated at their actual x.
ONE_SIDED_EPS = 1e-12
ON_CONE_WINDOW = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Physical constants in dimensionless form.

    dipole_strength: D = Omega|d|/(e c); the default matches a
        hydrogen-like 1s -> 2p transition scale.
    alpha: fine-structure constant.
    nu_max: UV frequency cutoff omega_max/Omega for photon mode integrals.
        The two-photon channel is regularized by this cutoff; the default
        keeps modes up to twice the transition frequency, which is where
        the cross-atom interference is visible against the cutoff-dominated
        same-atom background (larger cutoffs drive the two-photon
        concurrence to zero everywhere).
    z_max_factor: sets the cutoff z_max = z_max_factor * z inside the
        radiative self-correction amplitude.
    """

    dipole_strength: float = 5e-3
    alpha: float = FINE_STRUCTURE
    nu_max: float = 2.0
    z_max_factor: float = 50.0

    def __post_init__(self):
        if not self.dipole_strength > 0:
            raise ValueError("dipole_strength must be > 0")
        if not self.alpha > 0:
            raise ValueError("alpha must be > 0")
        if not self.nu_max > 1:
            raise ValueError("nu_max must be > 1")
        if not self.z_max_factor > 0:
            raise ValueError("z_max_factor must be > 0")


@dataclass(frozen=True)
class Kinematics:
    """A spacetime point in the dimensionless pair (x, z)."""

    x: float
    z: float

    def __post_init__(self):
        if not (self.x > 0 and self.x == self.x and self.x != float("inf")):
            raise ValueError(f"x must be a positive finite real, got {self.x}")
        if not (self.z > 0 and self.z == self.z and self.z != float("inf")):
            raise ValueError(f"z must be a positive finite real, got {self.z}")

    def omega_t(self) -> float:
        """Elapsed time in units of the transition period, Omega*t = z/x."""
        return self.z / self.x

    def inside_lightcone(self) -> bool:
        """Strict predicate x < 1; every branch selection routes through here."""
        return self.x < 1.0

    def on_cone(self) -> bool:
        return abs(self.x - 1.0) <= ON_CONE_WINDOW

    def effective(self) -> tuple["Kinematics", bool]:
        """Resolve the x = 1 seam.

        Exactly x == 1.0 is evaluated as the limit from inside the cone
        (x -> 1-).  Nearby points are flagged but not moved; all closed
        forms are finite for any x != 1.
        """
        if self.x == 1.0:
            return Kinematics(1.0 - ONE_SIDED_EPS, self.z), True
        return self, self.on_cone()


def coupling_constant(p: ModelParams, k: Kinematics) -> float:
    """Dimensionless coupling K = alpha D^2 / z^2.

    K * z^2 is independent of z for fixed dipole strength.
    """
    if k.z == 0:
        raise ValueError("z = 0 is outside the model domain")
    return p.alpha * p.dipole_strength**2 / k.z**2
