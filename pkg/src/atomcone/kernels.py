"""Single-photon mode kernels and the six mode-summed bilinears.

Every bilinear reduces to one quadrature template

    Q = P * int_0^{nu_max} dnu nu^3 tau^{s1}(nu) conj(tau^{s2}(nu)) A(delta nu z)

where tau^{+-} is the emission time integral, A the dipole angular factor
for the fixed geometry (dipoles along z-hat, atoms separated along y-hat),
delta = 1 for cross-atom kinds and 0 for same-atom kinds, and P a single
positive constant shared by every kind (2 alpha D^2 / 3 pi).  Concurrences
are ratios of bilinears, so P cancels; it is kept for physical scale.

The integrands are products of two known oscillations (rates Omega*t from
tau and z from A), so the quadrature uses fixed panels no wider than
min(pi/Omega*t, pi/z)/4 with Gauss-Legendre nodes, and estimates its error
by re-evaluating at a higher node order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import QuadratureError
from .model import Kinematics, ModelParams

TWO_PI = 2.0 * math.pi

# kind -> (s1, s2, delta)
BILINEAR_KINDS: dict[str, tuple[int, int, int]] = {
    "u2": (-1, -1, 0),
    "v2": (+1, +1, 0),
    "m_uu": (-1, -1, 1),
    "m_vv": (+1, +1, 1),
    "l_cross": (-1, +1, 1),
    "uv_same": (-1, +1, 0),
}

CROSS_ATOM_KINDS = ("m_uu", "m_vv", "l_cross")


def shared_prefactor(p: ModelParams, scale: float = 1.0) -> float:
    """The common positive constant multiplying every mode sum."""
    return scale * 2.0 * p.alpha * p.dipole_strength**2 / (3.0 * math.pi)


def emission_time_integral(sign: int, nu, omega_t: float):
    """tau^s(nu) = (exp(i (nu+s) Omega t) - 1) / (i (nu+s)), s = +-1.

    The removable singularity at nu = -s is handled exactly through the
    sinc form; tau -> Omega*t there (resonant emission).  Accepts scalars
    or arrays in nu.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    if omega_t < 0:
        raise ValueError("omega_t must be >= 0")
    c = np.asarray(nu, dtype=float) + float(sign)
    val = omega_t * np.exp(0.5j * c * omega_t) * np.sinc(c * omega_t / TWO_PI)
    if np.isscalar(nu):
        return complex(val)
    return val


def dipole_angular_factor(kappa):
    """A(kappa) = (3/2) (sin k / k + cos k / k^2 - sin k / k^3), A(0) = 1.

    Angular average of (1 - kz_hat^2) exp(i kappa k_hat . y_hat) over photon
    directions and polarizations, normalized to 1 at zero separation.
    Real for all kappa.  Accepts scalars or arrays.
    """
    kap = np.asarray(kappa, dtype=float)
    small = np.abs(kap) < 0.5
    ks = np.where(small, 1.0, kap)  # avoid 0/0 in the closed form
    closed = 1.5 * (np.sin(ks) / ks + np.cos(ks) / ks**2 - np.sin(ks) / ks**3)
    k2 = kap * kap
    series = 1.0 - k2 / 5.0 + 3.0 * k2 * k2 / 280.0 - k2 * k2 * k2 / 3780.0
    out = np.where(small, series, closed)
    if np.isscalar(kappa):
        return float(out)
    return out


def phi_kernel(c, omega_t: float):
    """phi(c) = int_0^T exp(i c t) dt = (exp(i c T) - 1)/(i c), T = Omega t."""
    c = np.asarray(c, dtype=float)
    val = omega_t * np.exp(0.5j * c * omega_t) * np.sinc(c * omega_t / TWO_PI)
    return val


def phi_kernel_prime(c, omega_t: float):
    """d phi / dc = int_0^T i t exp(i c t) dt."""
    t = omega_t
    c = np.asarray(c, dtype=float)
    ct = c * t
    small = np.abs(ct) < 1e-3
    cs = np.where(small, 1.0, c)
    e = np.exp(1j * cs * t)
    closed = t * e / cs + 1j * (e - 1.0) / (cs * cs)
    series = 1j * t * t / 2.0 - c * t**3 / 3.0 - 1j * c * c * t**4 / 8.0 + c**3 * t**5 / 30.0
    return np.where(small, series, closed)


def _moment(k: int, a: float, t: float) -> complex:
    """mu_k = int_0^T t^k exp(i a t) dt with small-argument series."""
    if abs(a * t) < 1e-3:
        total = 0.0j
        term = t ** (k + 1)
        fact = 1.0
        for j in range(0, 8):
            total += (1j * a) ** j * t ** (k + j + 1) / ((k + j + 1) * fact)
            fact *= j + 1
        return total
    if k == 0:
        return complex(phi_kernel(a, t))
    return (t**k) * np.exp(1j * a * t) / (1j * a) - (k / (1j * a)) * _moment(k - 1, a, t)


def ordered_emission_kernel(a: float, b: float, omega_t: float) -> complex:
    """W(a, b) = int_0^T dt1 exp(i a t1) (exp(i b t1) - 1)/(i b).

    The nested two-vertex time integral with ordering t1 > t2; every
    singularity (a, b or a+b -> 0) is removable and handled by series.
    """
    if omega_t < 0:
        raise ValueError("omega_t must be >= 0")
    t = omega_t
    if t == 0.0:
        return 0.0j
    if abs(b * t) >= 1e-5:
        return complex((phi_kernel(a + b, t) - phi_kernel(a, t)) / (1j * b))
    w = _moment(1, a, t)
    w += (1j * b / 2.0) * _moment(2, a, t)
    w += ((1j * b) ** 2 / 6.0) * _moment(3, a, t)
    w += ((1j * b) ** 3 / 24.0) * _moment(4, a, t)
    return complex(w)


@lru_cache(maxsize=64)
def _gauss_legendre(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    x, w = np.polynomial.legendre.leggauss(n)
    return tuple(x), tuple(w)


def panel_nodes(lo: float, hi: float, max_width: float, npts: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on uniform panels covering [lo, hi]."""
    if hi <= lo:
        raise ValueError("empty integration range")
    n_panels = max(1, int(math.ceil((hi - lo) / max_width)))
    width = (hi - lo) / n_panels
    xi, wi = _gauss_legendre(npts)
    xi = np.asarray(xi)
    wi = np.asarray(wi)
    starts = lo + width * np.arange(n_panels)
    x = (starts[:, None] + 0.5 * width * (xi[None, :] + 1.0)).ravel()
    w = np.broadcast_to(0.5 * width * wi, (n_panels, npts)).ravel().copy()
    return x, w


def bilinear_panel_width(omega_t: float, z: float) -> float:
    """Panel width resolving both oscillation scales: min(pi/T, pi/z)/4."""
    return min(math.pi / max(omega_t, 1.0), math.pi / max(z, 1.0)) / 4.0


def _bilinear_quad(kind: str, p: ModelParams, k: Kinematics, nu_max: float, npts: int, scale: float) -> tuple[complex, float]:
    s1, s2, delta = BILINEAR_KINDS[kind]
    kk, _ = k.effective()
    t = kk.omega_t()
    z = kk.z
    nu, w = panel_nodes(0.0, nu_max, bilinear_panel_width(t, z), npts)
    t1 = emission_time_integral(s1, nu, t)
    t2 = emission_time_integral(s2, nu, t)
    ang = dipole_angular_factor(nu * z) if delta == 1 else 1.0
    pref = shared_prefactor(p, scale)
    core = w * nu**3 * t1 * np.conj(t2)
    value = pref * np.sum(core * ang)
    ref = pref * float(np.sum(w * nu**3 * np.abs(t1) * np.abs(t2)))
    return complex(value), ref


def spectral_bilinear(kind: str, p: ModelParams, k: Kinematics, nu_max: float | None = None, scale: float = 1.0) -> complex:
    """One mode-summed bilinear; see the module docstring for the template.

    Raises QuadratureError when the node-refinement error estimate exceeds
    1e-6 relative to the L1 scale of the integrand.
    """
    if kind not in BILINEAR_KINDS:
        raise ValueError(f"unknown bilinear kind {kind!r}")
    cutoff = p.nu_max if nu_max is None else nu_max
    coarse, _ = _bilinear_quad(kind, p, k, cutoff, 5, scale)
    fine, ref = _bilinear_quad(kind, p, k, cutoff, 8, scale)
    est = abs(fine - coarse)
    if est > 1e-6 * max(ref, 1e-300):
        raise QuadratureError(
            f"bilinear {kind} quadrature did not converge (estimate {est:.3e}, scale {ref:.3e})",
            estimate=est,
        )
    return fine


@dataclass(frozen=True)
class BilinearSet:
    """The six mode-summed bilinears at one point, with cutoff metadata.

    cutoff_shift maps each kind to its relative change when the cutoff is
    doubled; cutoff_dependent flags kinds whose value is dominated by the
    cutoff (all same-atom kinds, plus any cross-atom kind shifting >= 2%).
    """

    u2: float
    v2: float
    m_uu: complex
    m_vv: complex
    l_cross: complex
    uv_same: complex
    at: Kinematics
    nu_max: float
    cutoff_shift: dict
    cutoff_dependent: dict

    def __post_init__(self):
        if self.u2 < 0 or self.v2 < 0:
            raise ValueError("diagonal bilinears must be nonnegative")


def compute_bilinear_set(p: ModelParams, k: Kinematics, nu_max: float | None = None, scale: float = 1.0) -> BilinearSet:
    cutoff = p.nu_max if nu_max is None else nu_max
    base = {kind: spectral_bilinear(kind, p, k, cutoff, scale) for kind in BILINEAR_KINDS}
    doubled = {kind: spectral_bilinear(kind, p, k, 2.0 * cutoff, scale) for kind in BILINEAR_KINDS}
    shift = {}
    dependent = {}
    for kind in BILINEAR_KINDS:
        ref = max(abs(base[kind]), 1e-300)
        shift[kind] = abs(doubled[kind] - base[kind]) / ref
        dependent[kind] = (BILINEAR_KINDS[kind][2] == 0) or (shift[kind] >= 0.02)
    return BilinearSet(
        u2=base["u2"].real,
        v2=base["v2"].real,
        m_uu=base["m_uu"],
        m_vv=base["m_vv"],
        l_cross=base["l_cross"],
        uv_same=base["uv_same"],
        at=k,
        nu_max=cutoff,
        cutoff_shift=shift,
        cutoff_dependent=dependent,
    )
