"""Four-component spinors, discrete operators and bilinear covariants.

A Dirac spinor is a complex ``numpy`` array of shape ``(4,)``. In the
chiral representation used here the upper pair is the right-handed block
phi_R and the lower pair the left-handed block phi_L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .clifford import ETA, SIGMA, gamma, gamma0123, gamma5, gamma_ab, gamma_upper
from .errors import ImaginaryResidue

Hand = Literal["left", "right"]

PAIRS = tuple(itertools.combinations(range(4), 2))
RESIDUE_THRESHOLD = 1e-8


def as_spinor(psi) -> np.ndarray:
    """Validate and copy a 4-component spinor."""
    arr = np.array(psi, dtype=complex).reshape(-1)
    if arr.shape != (4,):
        raise ValueError(f"a Dirac spinor has 4 components, got shape {np.shape(psi)}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("spinor components must be finite")
    return arr


def real_imag_parts(psi) -> tuple[np.ndarray, np.ndarray]:
    """The decomposition psi_j = psi_ja + i psi_jb as two real arrays (a, b)."""
    psi = as_spinor(psi)
    return psi.real.copy(), psi.imag.copy()


def right_block(psi) -> np.ndarray:
    return as_spinor(psi)[:2]


def left_block(psi) -> np.ndarray:
    return as_spinor(psi)[2:]


def dirac_dual(psi) -> np.ndarray:
    """Row spinor psi^dagger gamma^0."""
    psi = as_spinor(psi)
    return psi.conj() @ gamma_upper(0)


def charge_conjugate(psi) -> np.ndarray:
    """C psi = -gamma^2 psi^* (antilinear, an involution in this representation)."""
    psi = as_spinor(psi)
    return -gamma_upper(2) @ psi.conj()


def chirality_project(psi, hand: Hand) -> np.ndarray:
    psi = as_spinor(psi)
    g5 = gamma5()
    if hand == "right":
        return 0.5 * (psi + g5 @ psi)
    if hand == "left":
        return 0.5 * (psi - g5 @ psi)
    raise ValueError(f"hand must be 'left' or 'right', got {hand!r}")


def sigma_dot(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    return n[0] * SIGMA[0] + n[1] * SIGMA[1] + n[2] * SIGMA[2]


def helicity_apply(two_spinor, p_hat) -> np.ndarray:
    """Apply the helicity operator sigma . p_hat to a 2-spinor."""
    p_hat = np.asarray(p_hat, dtype=float)
    if p_hat.shape != (3,) or abs(np.linalg.norm(p_hat) - 1.0) > 1e-12:
        raise ValueError("p_hat must be a unit 3-vector")
    return sigma_dot(p_hat) @ np.asarray(two_spinor, dtype=complex)


def minkowski_square(v) -> float:
    v = np.asarray(v, dtype=float)
    return float(v @ ETA @ v)


def minkowski_dot(u, v) -> float:
    return float(np.asarray(u, dtype=float) @ ETA @ np.asarray(v, dtype=float))


@dataclass(frozen=True)
class BilinearCovariants:
    """sigma, chi (scalars), J, K (lower-index 4-vectors), S_{mu nu} for mu<nu.

    Defined by sigma = psibar psi, J_mu = psibar gamma_mu psi,
    S_{mu nu} = (1/2) psi^dagger gamma_0 i gamma_{mu nu} psi,
    K_mu = psibar i gamma_0123 gamma_mu psi, chi = -psibar gamma_0123 psi.

    For covariants built from one spinor the Fierz identities read
    J.J = sigma^2 + chi^2, J.K = 0, K.K = -J.J (checked against direct
    matrix evaluation in the test suite).
    """

    sigma: float
    chi: float
    J: np.ndarray = field(repr=False)
    K: np.ndarray = field(repr=False)
    S: np.ndarray = field(repr=False)
    max_imag: float = 0.0

    def as_dict(self) -> dict:
        return {
            "sigma": float(self.sigma),
            "chi": float(self.chi),
            "J": [float(x) for x in self.J],
            "K": [float(x) for x in self.K],
            "S": [float(x) for x in self.S],
        }


def _bilinear_matrices() -> tuple[np.ndarray, list[str]]:
    g0 = gamma_upper(0)
    v = gamma0123()
    mats, names = [g0], ["sigma"]
    for m in range(4):
        mats.append(g0 @ gamma(m))
        names.append(f"J{m}")
    for m in range(4):
        mats.append(g0 @ (1j * v @ gamma(m)))
        names.append(f"K{m}")
    for a, b in PAIRS:
        mats.append(0.5 * g0 @ (1j * gamma_ab(a, b)))
        names.append(f"S{a}{b}")
    mats.append(-g0 @ v)
    names.append("chi")
    return np.stack(mats), names


_BILINEAR_STACK, _BILINEAR_NAMES = _bilinear_matrices()
_BILINEAR_STACK.flags.writeable = False


def bilinears(psi, threshold: float = RESIDUE_THRESHOLD) -> BilinearCovariants:
    """All five bilinear covariants of ``psi``.

    Raises ImaginaryResidue if any sandwich has an imaginary part above
    ``threshold * |psi|^2``.
    """
    psi = as_spinor(psi)
    vals = np.einsum("i,kij,j->k", psi.conj(), _BILINEAR_STACK, psi)
    norm2 = float(np.vdot(psi, psi).real)
    imag = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    if imag > threshold * max(norm2, np.finfo(float).tiny):
        k = int(np.argmax(np.abs(vals.imag)))
        raise ImaginaryResidue(_BILINEAR_NAMES[k], imag, threshold * norm2)
    r = vals.real
    return BilinearCovariants(
        sigma=float(r[0]),
        chi=float(r[15]),
        J=r[1:5].copy(),
        K=r[5:9].copy(),
        S=r[9:15].copy(),
        max_imag=imag,
    )


def bilinears_raw(psi) -> np.ndarray:
    """Unreduced complex sandwiches in the order sigma, J0..3, K0..3, S01..S23, chi."""
    psi = as_spinor(psi)
    return np.einsum("i,kij,j->k", psi.conj(), _BILINEAR_STACK, psi)


def fierz_residuals(cov: BilinearCovariants) -> tuple[float, float, float]:
    """(J.J - sigma^2 - chi^2, J.K, K.K + J.J)."""
    jj = minkowski_square(cov.J)
    return (
        jj - cov.sigma**2 - cov.chi**2,
        minkowski_dot(cov.J, cov.K),
        minkowski_square(cov.K) + jj,
    )
