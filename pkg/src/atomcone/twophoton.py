"""Two-photon channel: mode-summed quadratics and their concurrence.

Conditioned on two photons in the final state, the atoms end in
f|EE> + g|GG> for each photon pair.  g = u_B u'_A + u_A u'_B is built from
independent single-photon emissions; f is two-photon emission by a single
atom, one counter-rotating vertex and one rotating vertex, strictly
time-ordered through the nested kernel W.  Summing over the undetected
pair gives three quadratics

    F2 = sum |f|^2,  G2 = sum |g|^2,  FG = sum f g*,

and the concurrence is the scale-free ratio 2|FG| / (F2 + G2), with the
per-pair variant exposed separately.

G2 collapses symbolically onto the single-photon bilinears,
G2 = 2 u2^2 + 2 |m_uu|^2, and needs no 2D quadrature.  F2 and FG are 2D
frequency quadratures over the photon pair: |f|^2 carries the same-atom
weight 1 plus the cross-atom weight A(nu z) A(nu' z), while f g* (one
atom against two) is weighted by A(nu z) + A(nu' z).  The cross-atom
interference competes with a same-atom background that grows with the
UV cutoff, which is why the channel is reported together with its cutoff
sensitivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureError, UndefinedStateError
from .kernels import (
    dipole_angular_factor,
    emission_time_integral,
    panel_nodes,
    phi_kernel,
    phi_kernel_prime,
    shared_prefactor,
    spectral_bilinear,
)
from .model import Kinematics, ModelParams

_RESONANCE_TOL = 1e-7
_BLOCK = 256


def _phi_outer(nu_rows: np.ndarray, nu_cols: np.ndarray, omega_t: float) -> np.ndarray:
    """phi(nu_i + nu_j) on the tensor grid via one outer product.

    exp(i (nu_i + nu_j) T) factorizes, so no matrix-sized exp is needed.
    """
    t = omega_t
    s = nu_rows[:, None] + nu_cols[None, :]
    er = np.exp(1j * nu_rows * t)
    ec = np.exp(1j * nu_cols * t)
    num = np.outer(er, ec) - 1.0
    small = s * t < 1e-3
    safe = np.where(small, 1.0, s)
    out = num / (1j * safe)
    if small.any():
        st = s * t
        series = t * (1.0 + 0.5j * st - st * st / 6.0)
        out = np.where(small, series, out)
    return out


def _w_block(nu_rows: np.ndarray, nu_cols: np.ndarray, omega_t: float) -> np.ndarray:
    """Rows of the ordered two-photon kernel W_f(nu, nu').

    W_f(n, n') = W(n+1, n'-1) + W(n'+1, n-1) with
    W(a, b) = (phi(a+b) - phi(a)) / (i b); the b -> 0 columns use the
    analytic limit -i phi'(a).
    """
    t = omega_t
    # a + b = (nu + 1) + (nu' - 1) = nu + nu' for either vertex assignment
    phi_s = _phi_outer(nu_rows, nu_cols, t)
    phi_r = phi_kernel(nu_rows + 1.0, t)[:, None]
    phi_c = phi_kernel(nu_cols + 1.0, t)[None, :]
    b_c = nu_cols[None, :] - 1.0
    b_r = nu_rows[:, None] - 1.0

    res_c = np.abs(b_c) < _RESONANCE_TOL
    res_r = np.abs(b_r) < _RESONANCE_TOL
    safe_c = np.where(res_c, 1.0, b_c)
    safe_r = np.where(res_r, 1.0, b_r)

    term1 = (phi_s - phi_r) / (1j * safe_c)
    term2 = (phi_s - phi_c) / (1j * safe_r)
    if res_c.any():
        lim1 = np.broadcast_to(-1j * phi_kernel_prime(nu_rows + 1.0, t)[:, None], term1.shape)
        term1 = np.where(res_c, lim1, term1)
    if res_r.any():
        lim2 = np.broadcast_to(-1j * phi_kernel_prime(nu_cols + 1.0, t)[None, :], term2.shape)
        term2 = np.where(res_r, lim2, term2)
    return term1 + term2


def pair_kernels(p: ModelParams, k: Kinematics, nu1: float, nu2: float, scale: float = 1.0) -> tuple[float, float, complex]:
    """(f2, g2, fg) resolved on one frequency pair (angles summed out).

    These are exactly the kernels the mode sums integrate over (nu, nu').
    """
    kk, _ = k.effective()
    t = kk.omega_t()
    z = kk.z
    pref = shared_prefactor(p, scale)
    a1 = float(dipole_angular_factor(nu1 * z))
    a2 = float(dipole_angular_factor(nu2 * z))
    tau1 = emission_time_integral(-1, nu1, t)
    tau2 = emission_time_integral(-1, nu2, t)
    wf = _w_block(np.array([nu1]), np.array([nu2]), t)[0, 0]
    meas = pref**2 * nu1**3 * nu2**3
    f2 = 2.0 * meas * abs(wf) ** 2 * (1.0 + a1 * a2)
    g2 = 2.0 * meas * abs(tau1) ** 2 * abs(tau2) ** 2 * (1.0 + a1 * a2)
    fg = 2.0 * meas * wf * np.conj(tau1) * np.conj(tau2) * (a1 + a2)
    return f2, g2, complex(fg)


def _f_quadrature(p: ModelParams, k: Kinematics, nu_max: float, npts: int, scale: float) -> tuple[float, complex, float]:
    """(F2, FG, FG_scale) on an npts-per-panel tensor grid.

    Panels are one period of the fastest combined oscillation wide; the
    caller compares two node orders for the error estimate.
    """
    kk, _ = k.effective()
    t = kk.omega_t()
    z = kk.z
    width = 2.0 * math.pi / (t + z + 2.0)
    nu, w = panel_nodes(0.0, nu_max, width, npts)
    pref = shared_prefactor(p, scale)
    w3 = w * nu**3 * pref
    ang = dipole_angular_factor(nu * z)
    tau_c = np.conj(emission_time_integral(-1, nu, t))

    va = w3 * ang
    u_fg = w3 * tau_c * ang
    v_fg = w3 * tau_c

    f2_same = 0.0
    f2_cross = 0.0
    fg_acc = 0.0j
    fg_scale = 0.0
    for lo in range(0, nu.size, _BLOCK):
        rows = slice(lo, min(lo + _BLOCK, nu.size))
        wf = _w_block(nu[rows], nu, t)
        aw = wf.real**2 + wf.imag**2
        f2_same += float(w3[rows] @ aw @ w3)
        f2_cross += float(va[rows] @ aw @ va)
        fg_acc += (u_fg[rows] @ wf @ v_fg) + (v_fg[rows] @ wf @ u_fg)
        awf = np.sqrt(aw)
        fg_scale += float(np.abs(u_fg[rows]) @ awf @ np.abs(v_fg)) * 2.0
    f2 = 2.0 * (f2_same + f2_cross)
    fg = 2.0 * fg_acc
    return f2, complex(fg), 2.0 * fg_scale


@dataclass(frozen=True)
class TwoPhotonBilinears:
    """Mode-summed two-photon quadratics at one point."""

    f2: float
    g2: float
    fg: complex
    at: Kinematics
    cutoff_meta: dict

    def __post_init__(self):
        if self.f2 < 0 or self.g2 < 0:
            raise ValueError("F2 and G2 must be nonnegative")


def _g_from_parts(u2: float, m_uu: complex) -> float:
    return 2.0 * u2 * u2 + 2.0 * abs(m_uu) ** 2


def _quadratics_at(p: ModelParams, k: Kinematics, nu_max: float, scale: float) -> tuple[float, float, complex]:
    u2 = spectral_bilinear("u2", p, k, nu_max, scale).real
    m_uu = spectral_bilinear("m_uu", p, k, nu_max, scale)
    coarse_f2, coarse_fg, _ = _f_quadrature(p, k, nu_max, 6, scale)
    f2, fg, fg_ref = _f_quadrature(p, k, nu_max, 8, scale)
    est_f2 = abs(f2 - coarse_f2)
    est_fg = abs(fg - coarse_fg)
    if est_f2 > 1e-4 * max(f2, 1e-300) or est_fg > 1e-4 * max(abs(fg), 1e-6 * fg_ref, 1e-300):
        raise QuadratureError(
            f"two-photon quadrature did not converge (F2 est {est_f2:.3e}, FG est {est_fg:.3e})",
            estimate=max(est_f2, est_fg),
        )
    return f2, _g_from_parts(u2, m_uu), fg


def g_bilinears(p: ModelParams, k: Kinematics, nu_max: float | None = None, scale: float = 1.0) -> tuple[float, dict]:
    """G2 with its single-photon building blocks (symbolic expansion)."""
    cutoff = p.nu_max if nu_max is None else nu_max
    u2 = spectral_bilinear("u2", p, k, cutoff, scale).real
    m_uu = spectral_bilinear("m_uu", p, k, cutoff, scale)
    return _g_from_parts(u2, m_uu), {"u2": u2, "m_uu": m_uu}


def f_bilinears(p: ModelParams, k: Kinematics, nu_max: float | None = None, scale: float = 1.0) -> tuple[float, complex]:
    """(F2, FG) by 2D panel quadrature over the photon frequency pair."""
    cutoff = p.nu_max if nu_max is None else nu_max
    f2, _, fg = _quadratics_at(p, k, cutoff, scale)
    return f2, fg


def two_photon_point(
    p: ModelParams,
    k: Kinematics,
    nu_max: float | None = None,
    scale: float = 1.0,
    sensitivity: bool = True,
) -> TwoPhotonBilinears:
    """All two-photon quadratics at one point, with cutoff metadata.

    When sensitivity is on, everything is recomputed at twice the cutoff
    and the shift of the concurrence is attached to cutoff_meta; F2 holds
    cutoff-divergent same-atom pieces, so honest reporting carries this
    delta everywhere.
    """
    cutoff = p.nu_max if nu_max is None else nu_max
    f2, g2, fg = _quadratics_at(p, k, cutoff, scale)
    meta = {"nu_max": cutoff}
    if sensitivity:
        f2d, g2d, fgd = _quadratics_at(p, k, 2.0 * cutoff, scale)
        c_base = 2.0 * abs(fg) / (f2 + g2) if f2 + g2 > 0 else float("nan")
        c_doubled = 2.0 * abs(fgd) / (f2d + g2d) if f2d + g2d > 0 else float("nan")
        meta["concurrence_shift"] = abs(c_doubled - c_base)
        meta["f2_shift"] = abs(f2d - f2) / max(f2, 1e-300)
        meta["g2_shift"] = abs(g2d - g2) / max(g2, 1e-300)
    _, on_cone = k.effective()
    meta["on_cone"] = on_cone
    return TwoPhotonBilinears(f2=f2, g2=g2, fg=fg, at=k, cutoff_meta=meta)


def concurrence_from_bilinears(bl: TwoPhotonBilinears) -> float:
    total = bl.f2 + bl.g2
    if total <= 0.0:
        raise UndefinedStateError("F2 + G2 = 0: no two-photon component")
    return float(min(2.0 * abs(bl.fg) / total, 1.0))


def two_photon_concurrence(p: ModelParams, k: Kinematics, nu_max: float | None = None, scale: float = 1.0) -> float:
    """C = 2|FG| / (F2 + G2), the mode-summed two-photon concurrence."""
    bl = two_photon_point(p, k, nu_max=nu_max, scale=scale, sensitivity=False)
    return concurrence_from_bilinears(bl)


def pair_concurrence(p: ModelParams, k: Kinematics, nu1: float, nu2: float) -> float:
    """Concurrence 2|f g*| / (|f|^2 + |g|^2) for one frequency pair."""
    f2, g2, fg = pair_kernels(p, k, nu1, nu2)
    total = f2 + g2
    if total <= 0.0:
        raise UndefinedStateError("pair has no two-photon amplitude")
    return float(min(2.0 * abs(fg) / total, 1.0))
