"""Wootters concurrence for two qubits.

Basis ordering throughout: (|EE>, |EG>, |GE>, |GG>).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UndefinedStateError

_PSD_TOL = 1e-12

# sigma_y (x) sigma_y in the (EE, EG, GE, GG) basis
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class TwoQubitState:
    """A normalized two-qubit density matrix, optionally with pure coefficients."""

    rho: np.ndarray
    pure: np.ndarray | None = None

    @classmethod
    def from_pure(cls, c_ee: complex, c_eg: complex, c_ge: complex, c_gg: complex) -> "TwoQubitState":
        vec = np.array([c_ee, c_eg, c_ge, c_gg], dtype=complex)
        norm2 = float(np.vdot(vec, vec).real)
        if norm2 <= 0:
            raise UndefinedStateError("pure state has zero norm")
        vec = vec / np.sqrt(norm2)
        return cls(rho=np.outer(vec, vec.conj()), pure=vec)

    @classmethod
    def from_density(cls, rho: np.ndarray) -> "TwoQubitState":
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got shape {rho.shape}")
        if not np.allclose(rho, rho.conj().T, atol=1e-10):
            raise ValueError("density matrix must be Hermitian")
        tr = float(np.trace(rho).real)
        if tr <= 0:
            raise UndefinedStateError("density matrix has nonpositive trace")
        rho = rho / tr
        evals = np.linalg.eigvalsh(rho)
        if evals.min() < -_PSD_TOL:
            raise ValueError(f"density matrix not PSD (min eigenvalue {evals.min():.3e})")
        return cls(rho=rho)


def wootters_concurrence(state: TwoQubitState) -> float:
    """C(rho) = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).

    The l_j are the eigenvalues of rho * rho~ with rho~ the spin-flipped
    conjugate.  Computed through the Hermitian product sqrt(rho) rho~
    sqrt(rho), which shares the spectrum and keeps tiny eigenvalues real;
    values above -1e-12 are clamped to zero.
    """
    rho = state.rho
    rho_tilde = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    w, v = np.linalg.eigh(rho)
    w = np.clip(w, 0.0, None)
    sqrt_rho = (v * np.sqrt(w)) @ v.conj().T
    m = sqrt_rho @ rho_tilde @ sqrt_rho
    lam = np.linalg.eigvalsh(m).real
    lam = np.sqrt(np.clip(lam, 0.0, None))[::-1]
    c = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(max(c, 0.0), 1.0))


def two_component_concurrence(amp1: complex, amp2: complex) -> float:
    """Concurrence 2|a1||a2| / (|a1|^2 + |a2|^2) of a1|EE> + a2|GG>.

    Callers pass unnormalized amplitudes; normalization happens here and
    nowhere else.  Also valid for a1|EG> + a2|GE>.
    """
    m1, m2 = abs(amp1), abs(amp2)
    if m1 == 0.0 and m2 == 0.0:
        raise UndefinedStateError("both amplitudes vanish; state undefined")
    big, small = (m1, m2) if m1 >= m2 else (m2, m1)
    r = small / big
    return float(min(2.0 * r / (1.0 + r * r), 1.0))
