"""Dual-helicity eigenspinors of charge conjugation (ELKO).

Conventions
-----------
* ``pair="-+"`` puts the positive-helicity rest spinor phi^+ in the lower
  (left-handed) block and its Wigner flip, of negative helicity, in the
  upper block; ``pair="+-"`` uses phi^-.
* The upper block is ``+sigma_2 phi^*`` for self-conjugate (``"S"``) and
  ``-sigma_2 phi^*`` for anti-self-conjugate (``"A"``) spinors, so that
  C lambda = +lambda or -lambda respectively.
* Natural units; momenta and masses are plain positive floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .clifford import SIGMA, gamma_upper
from .errors import MissingPartner
from .spinors import as_spinor, sigma_dot

ConjType = Literal["S", "A"]
Pair = Literal["-+", "+-"]

CONJ_TYPES: tuple[ConjType, ...] = ("S", "A")
PAIRS: tuple[Pair, ...] = ("-+", "+-")

_CONJ_ALIASES = {"S": "S", "self": "S", "A": "A", "anti": "A"}


def normalize_conj_type(conj_type: str) -> ConjType:
    try:
        return _CONJ_ALIASES[conj_type]  # type: ignore[return-value]
    except KeyError:
        raise ValueError(f"conjugacy type must be 'S' or 'A', got {conj_type!r}") from None


def normalize_pair(pair: str) -> Pair:
    if pair not in PAIRS:
        raise ValueError(f"helicity pair must be '-+' or '+-', got {pair!r}")
    return pair  # type: ignore[return-value]


def partner_pair(pair: Pair) -> Pair:
    return "+-" if pair == "-+" else "-+"


def lower_helicity(pair: Pair) -> int:
    """Helicity of the lower block: +1 for '-+', -1 for '+-'."""
    return 1 if normalize_pair(pair) == "-+" else -1


@dataclass(frozen=True)
class Momentum:
    m: float
    p_mag: float = 0.0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.m) and self.m > 0):
            raise ValueError(f"mass must be positive, got {self.m!r}")
        if not (np.isfinite(self.p_mag) and self.p_mag >= 0):
            raise ValueError(f"|p| must be non-negative, got {self.p_mag!r}")
        if not (np.isfinite(self.theta) and np.isfinite(self.phi)):
            raise ValueError("angles must be finite")

    @property
    def energy(self) -> float:
        return float(np.hypot(self.p_mag, self.m))

    @property
    def p_hat(self) -> np.ndarray:
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])

    @property
    def p_vec(self) -> np.ndarray:
        return self.p_mag * self.p_hat

    def at_rest(self) -> "Momentum":
        return Momentum(self.m, 0.0, self.theta, self.phi)


def rest_helicity_spinor(sign: int | str, theta: float, phi: float, m: float) -> np.ndarray:
    """Rest-frame helicity eigenspinor phi^{+} or phi^{-} with the standard phases."""
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m!r}")
    s = _sign(sign)
    c, sn = np.cos(theta / 2), np.sin(theta / 2)
    em, ep = np.exp(-0.5j * phi), np.exp(0.5j * phi)
    if s > 0:
        v = np.array([c * em, sn * ep])
    else:
        v = np.array([-sn * em, c * ep])
    return np.sqrt(m) * v


def _sign(sign: int | str) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def wigner_flip(two_spinor) -> np.ndarray:
    """sigma_2 conj(x): the map i*Theta acting on a complex-conjugated 2-spinor."""
    return SIGMA[1] @ np.conj(np.asarray(two_spinor, dtype=complex))


def elko_rest(conj_type: str, pair: str, momentum: Momentum) -> np.ndarray:
    """Rest-frame ELKO built from the mass and direction carried by ``momentum``."""
    ct = normalize_conj_type(conj_type)
    h = lower_helicity(pair)
    phi_l = rest_helicity_spinor(h, momentum.theta, momentum.phi, momentum.m)
    upper = (1.0 if ct == "S" else -1.0) * wigner_flip(phi_l)
    return np.concatenate([upper, phi_l])


def boost_matrix(momentum: Momentum) -> np.ndarray:
    """Pure boost from rest to ``momentum`` in the chiral representation."""
    m, E = momentum.m, momentum.energy
    sp = sigma_dot(momentum.p_vec)
    n = np.sqrt(2.0 * m * (E + m))
    one = (E + m) * np.eye(2)
    z = np.zeros((2, 2))
    return np.block([[one + sp, z], [z, one - sp]]) / n


def boost(psi, momentum: Momentum) -> np.ndarray:
    return boost_matrix(momentum) @ as_spinor(psi)


def scalar_boost_factor(pair: str, momentum: Momentum) -> float:
    """sqrt((E+m)/2m) (1 -/+ |p|/(E+m)), the factor a boost reduces to on rest ELKOs."""
    m, E = momentum.m, momentum.energy
    s = -1.0 if normalize_pair(pair) == "-+" else 1.0
    return float(np.sqrt((E + m) / (2 * m)) * (1.0 + s * momentum.p_mag / (E + m)))


@dataclass(frozen=True)
class ElkoSpinor:
    psi: np.ndarray = field(repr=False)
    conj_type: ConjType
    pair: Pair | None = None
    momentum: Momentum | None = None
    phase_matched: bool | None = None

    @property
    def upper(self) -> np.ndarray:
        return self.psi[:2]

    @property
    def lower(self) -> np.ndarray:
        return self.psi[2:]


def elko(momentum: Momentum, conj_type: str, pair: str) -> ElkoSpinor:
    ct, pr = normalize_conj_type(conj_type), normalize_pair(pair)
    psi = boost(elko_rest(ct, pr, momentum), momentum)
    psi.flags.writeable = False
    return ElkoSpinor(psi, ct, pr, momentum)


def elko_family(momentum: Momentum) -> dict[tuple[ConjType, Pair], ElkoSpinor]:
    return {(ct, pr): elko(momentum, ct, pr) for ct in CONJ_TYPES for pr in PAIRS}


def elko_dual(lam: ElkoSpinor, all_four: Iterable[ElkoSpinor] | dict) -> np.ndarray:
    """Dual row spinor: -i [partner]^dagger gamma^0 for '-+', +i ... for '+-'.

    The partner has the same conjugacy type and momentum and the swapped
    helicity pair. The overall sign is chosen so that self-conjugate spinors
    have norm +2m and anti-self-conjugate ones -2m.
    """
    candidates = all_four.values() if isinstance(all_four, dict) else all_four
    want = partner_pair(lam.pair) if lam.pair is not None else None
    partner = None
    for other in candidates:
        if other.conj_type == lam.conj_type and other.pair == want and other.momentum == lam.momentum:
            partner = other
            break
    if partner is None:
        raise MissingPartner(f"no {lam.conj_type}{want} partner at the same momentum")
    phase = -1j if lam.pair == "-+" else 1j
    return phase * (np.conj(partner.psi) @ gamma_upper(0))


def dual_norm(lam: ElkoSpinor, all_four) -> complex:
    return complex(elko_dual(lam, all_four) @ lam.psi)
