"""Zero-photon channel: closed-form amplitudes and their concurrence.

Conditioned on the field staying in the vacuum, the two initially excited
atoms end in (1 + a)|EE> + b|GG> (unnormalized).  Here

  * a is the single-atom radiative self-correction, linear in the elapsed
    time and cutoff-dependent through a logarithm;
  * b is the photon-exchange amplitude, obtained by applying the
    transverse dipole operator -(d^2/dz^2 + (1/z) d/dz) at fixed Omega*t
    to a scalar integral I = I_plus + I_minus built from Ei on the
    imaginary axis.

Branch handling at the light cone: the closed form for I is written for
x > 1 and continued to x < 1 by keeping the Ei branch constants fixed
(no conjugate-symmetric flip) and adding the residue term
-2*pi*i * exp(i z (1 - 1/x)) to I_minus.  The sum I then jumps by exactly
-2*pi*i across x = 1, and b acquires an extra in-cone contribution from
the z-derivatives of the residue term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .concurrence import two_component_concurrence
from .errors import SingularConfigError
from .model import Kinematics, ModelParams, coupling_constant
from .specfun import si_ci

TWO_PI_I = 2j * math.pi


def _si_odd(w: float) -> float:
    si, _ = si_ci(abs(w))
    return si if w > 0 else -si


def _ci_even(w: float) -> float:
    _, ci = si_ci(abs(w))
    return ci


def _ei_continued(w: float) -> complex:
    """Ei(i w) continued across w = 0 from the w > 0 side.

    Equals the principal ei_imag for w > 0; for w < 0 the branch constant
    +i pi/2 is kept instead of flipping sign, i.e. principal value + i pi.
    """
    if w == 0.0:
        raise SingularConfigError("Ei argument vanished (point on the light cone)")
    si, ci = si_ci(abs(w))
    s = si if w > 0 else -si
    return complex(ci, s + 0.5 * math.pi)


def _seam_coords(k: Kinematics) -> tuple[float, float, float]:
    """(T, w_plus, w_minus) with the cone-sensitive w_minus = z(x-1)/x.

    w_minus is formed from (x - 1) directly so that points within 1e-9 of
    the cone keep full relative precision.
    """
    t = k.z / k.x
    w_plus = k.z + t
    w_minus = k.z * (k.x - 1.0) / k.x
    return t, w_plus, w_minus


def lightcone_integrals(k: Kinematics) -> tuple[complex, complex]:
    """The pair (I_plus, I_minus) of exchange integrals at a point.

    I_sign = (-i e^{-i Omega t} / (2 z)) * [ sign * 2 cos(Omega t) e^{sign i z}
             Ei(-sign i z) + e^{-i w} Ei(i w) - e^{i w} Ei(-i w) ],
    with w = z (1 + sign/x); inside the cone I_minus additionally carries
    the residue term -2 pi i e^{i z (1 - 1/x)}.
    """
    k, _ = k.effective()
    z = k.z
    t, w_plus, w_minus = _seam_coords(k)
    pref = -1j * cmath.exp(-1j * t) / (2.0 * z)
    cos_t = math.cos(t)

    ei_z = _ei_continued(z)

    def pair_terms(w: float) -> complex:
        e = _ei_continued(w)
        return cmath.exp(-1j * w) * e - cmath.exp(1j * w) * e.conjugate()

    bracket_plus = 2.0 * cos_t * cmath.exp(1j * z) * ei_z.conjugate() + pair_terms(w_plus)
    bracket_minus = -2.0 * cos_t * cmath.exp(-1j * z) * ei_z + pair_terms(w_minus)

    i_plus = pref * bracket_plus
    i_minus = pref * bracket_minus
    if k.inside_lightcone():
        i_minus = i_minus - TWO_PI_I * cmath.exp(1j * w_minus)
    return i_plus, i_minus


def exchange_integral(k: Kinematics) -> complex:
    """I = I_plus + I_minus."""
    ip, im = lightcone_integrals(k)
    return ip + im


def _cc(w: float) -> complex:
    """Pair combination e^{-iw} Ei(iw) - e^{iw} Ei(-iw), continued branch."""
    sc = _si_odd(w) + 0.5 * math.pi
    return 2j * (math.cos(w) * sc - math.sin(w) * _ci_even(w))


def _cc_prime(w: float) -> complex:
    sc = _si_odd(w) + 0.5 * math.pi
    return 2j * (-math.sin(w) * sc - math.cos(w) * _ci_even(w))


def _cc_second(w: float) -> complex:
    return -_cc(w) - 2j / w


def radiative_correction(p: ModelParams, k: Kinematics) -> complex:
    """Self-correction a = (4i K z^3 / 3x) (ln|1 - z_max/z| + 2 i pi).

    With z_max = z_max_factor * z the logarithm is a constant of the
    cutoff model; a is linear in Omega*t.
    """
    k, _ = k.effective()
    ratio = p.z_max_factor
    if ratio == 1.0:
        raise SingularConfigError("z_max = z makes the cutoff logarithm singular")
    kk = coupling_constant(p, k)
    log_term = complex(math.log(abs(1.0 - ratio)), 2.0 * math.pi)
    return (4j * kk * k.z**3 / (3.0 * k.x)) * log_term


def exchange_amplitude(p: ModelParams, k: Kinematics) -> complex:
    """Photon-exchange amplitude b.

    b = -(alpha D^2 / pi) (d^2/dz^2 + (1/z) d/dz) I at fixed Omega*t,
    evaluated analytically.  For the dipole geometry used throughout
    (dipoles along z-hat, separation along y-hat) the tensor operator
    reduces to exactly this radial form.
    """
    k, _ = k.effective()
    z = k.z
    t, w_plus, w_minus = _seam_coords(k)
    cos_t = math.cos(t)

    b0 = -2.0 * cos_t * _cc(z) + _cc(w_plus) + _cc(w_minus)
    b1 = -2.0 * cos_t * _cc_prime(z) + _cc_prime(w_plus) + _cc_prime(w_minus)
    b2 = -2.0 * cos_t * _cc_second(z) + _cc_second(w_plus) + _cc_second(w_minus)

    pref = -1j * cmath.exp(-1j * t) / (2.0 * z)
    radial = pref * (b2 - b1 / z + b0 / (z * z))
    if k.inside_lightcone():
        radial = radial + 2.0 * math.pi * cmath.exp(1j * w_minus) * (1j + 1.0 / z)
    return -(p.alpha * p.dipole_strength**2 / math.pi) * radial


@dataclass(frozen=True)
class VacuumAmplitudes:
    """All zero-photon amplitudes at one kinematic point."""

    a: complex
    b: complex
    i_plus: complex
    i_minus: complex
    at: Kinematics
    on_cone: bool


def vacuum_point(p: ModelParams, k: Kinematics) -> VacuumAmplitudes:
    _, on_cone = k.effective()
    ip, im = lightcone_integrals(k)
    return VacuumAmplitudes(
        a=radiative_correction(p, k),
        b=exchange_amplitude(p, k),
        i_plus=ip,
        i_minus=im,
        at=k,
        on_cone=on_cone,
    )


def vacuum_concurrence(p: ModelParams, k: Kinematics) -> float:
    """C of the conditioned state (1 + a)|EE> + b|GG>."""
    amp = vacuum_point(p, k)
    return two_component_concurrence(1.0 + amp.a, amp.b)
