"""Complexified Cl(1,3) as 4x4 matrices in the chiral (Weyl) representation.

Elements are plain ``numpy`` arrays of shape ``(4, 4)`` and dtype complex128.
``gamma(mu)`` returns the lower-index generator gamma_mu; with this choice
``-i gamma_0 gamma_1 gamma_2 gamma_3 = diag(1, 1, -1, -1)``, so the upper
two components are right-handed.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

I2 = np.eye(2, dtype=complex)
O2 = np.zeros((2, 2), dtype=complex)
SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

IDENTITY = np.eye(4, dtype=complex)
ZERO = np.zeros((4, 4), dtype=complex)

# gamma^0 = [[O, I], [I, O]], gamma^k = [[O, -sigma_k], [sigma_k, O]]
_UPPER = (np.block([[O2, I2], [I2, O2]]),) + tuple(
    np.block([[O2, -s], [s, O2]]) for s in SIGMA
)
_LOWER = tuple(ETA[m, m] * g for m, g in enumerate(_UPPER))
for _g in _UPPER + _LOWER:
    _g.flags.writeable = False


def _check_index(mu: int) -> None:
    if mu not in (0, 1, 2, 3):
        raise IndexError(f"spacetime index must be in 0..3, got {mu!r}")


def gamma(mu: int) -> np.ndarray:
    """Lower-index generator gamma_mu."""
    _check_index(mu)
    return _LOWER[mu]


def gamma_upper(mu: int) -> np.ndarray:
    """Upper-index generator gamma^mu = eta^{mu mu} gamma_mu."""
    _check_index(mu)
    return _UPPER[mu]


def gamma5() -> np.ndarray:
    return -1j * (_LOWER[0] @ _LOWER[1] @ _LOWER[2] @ _LOWER[3])


def gamma0123() -> np.ndarray:
    """Volume element gamma_0 gamma_1 gamma_2 gamma_3 (squares to -1); equals i*gamma5."""
    return _LOWER[0] @ _LOWER[1] @ _LOWER[2] @ _LOWER[3]


def gamma_ab(a: int, b: int) -> np.ndarray:
    """Bivector gamma_ab = (gamma_a gamma_b - gamma_b gamma_a) / 2."""
    ga, gb = gamma(a), gamma(b)
    return 0.5 * (ga @ gb - gb @ ga)


def product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.asarray(a) @ np.asarray(b)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


@lru_cache(maxsize=1)
def basis() -> tuple[tuple[tuple[int, ...], np.ndarray], ...]:
    """The 16 graded basis elements as ``(index_tuple, matrix)`` pairs.

    Ordered by grade, then lexicographically: 1, gamma_mu, gamma_mu gamma_nu
    (mu<nu), gamma_mu gamma_nu gamma_rho (mu<nu<rho), gamma_0123.
    """
    out = []
    for k in range(5):
        for idx in itertools.combinations(range(4), k):
            m = IDENTITY.copy()
            for i in idx:
                m = m @ _LOWER[i]
            m.flags.writeable = False
            out.append((idx, m))
    return tuple(out)


def basis_grades() -> np.ndarray:
    return np.array([len(idx) for idx, _ in basis()])


@lru_cache(maxsize=1)
def _basis_stack() -> np.ndarray:
    return np.stack([m for _, m in basis()])


@lru_cache(maxsize=1)
def gram_matrix() -> np.ndarray:
    """Gram matrix of the trace pairing (1/4) tr(B_i^dagger B_j)."""
    B = _basis_stack()
    return np.einsum("iab,jab->ij", B.conj(), B) / 4.0


def basis_coefficients(a: np.ndarray) -> np.ndarray:
    """Expansion coefficients of ``a`` over :func:`basis` (16 complex numbers)."""
    B = _basis_stack()
    rhs = np.einsum("iab,ab->i", B.conj(), np.asarray(a, dtype=complex)) / 4.0
    return np.linalg.solve(gram_matrix(), rhs)


def grade_project(a: np.ndarray, k: int) -> np.ndarray:
    if k not in range(5):
        raise ValueError(f"grade must be in 0..4, got {k!r}")
    c = basis_coefficients(a)
    mask = basis_grades() == k
    return np.einsum("i,iab->ab", c * mask, _basis_stack())


def from_coefficients(c) -> np.ndarray:
    return np.einsum("i,iab->ab", np.asarray(c, dtype=complex), _basis_stack())


def is_scalar(a: np.ndarray, atol: float = 0.0) -> bool:
    """True if ``a`` is a multiple of the identity."""
    a = np.asarray(a)
    return bool(np.max(np.abs(a - a[0, 0] * IDENTITY)) <= atol)
