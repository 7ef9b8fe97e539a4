"""Pointwise exterior algebra of Cl(1,3)-valued forms on an orthonormal coframe.

A :class:`CliffordForm` maps strictly increasing multi-indices over
{0, 1, 2, 3} to 4x4 complex coefficients. Real-valued forms are stored with
coefficients proportional to the identity. There is no manifold and no
derivative: curvature and torsion enter as sample data.

Conventions
-----------
* eta = diag(1, -1, -1, -1); volume form tau = theta^0 ^ theta^1 ^ theta^2 ^ theta^3.
* Hodge star fixed by xi ^ *zeta = G(xi, zeta) tau with G the metric
  extended to forms (product of eta^{ii} on orthonormal basis monomials).
* Curvature/torsion samples carry upper frame indices; lowering uses eta.
* Index sums in the action densities run over all ordered pairs (a, b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .clifford import ETA, IDENTITY, gamma, gamma0123, gamma_ab, is_scalar
from .errors import ImaginaryResidue, ImmirziUndefined
from .spinors import as_spinor, bilinears, dirac_dual

TWO_FORM_BASIS: tuple[tuple[int, int], ...] = tuple(itertools.combinations(range(4), 2))
VOLUME = (0, 1, 2, 3)

# Element placed between the curvature and the right coframe factor in the
# spinor-curvature term. The hermitian gamma5 makes that term purely
# imaginary; -gamma_0123 (= -i gamma5) makes it real with
# sigma = 1, chi = 0 reproducing the Einstein-Hilbert density.
QSL_INSERT = -gamma0123()


@lru_cache(maxsize=None)
def _sort_sign(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """(sign of the sorting permutation, sorted tuple); sign 0 on repeats."""
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


class CliffordForm:
    """Finite sum of (basis monomial) x (Clifford coefficient)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, ...], object] | None = None):
        c: dict[tuple[int, ...], np.ndarray] = {}
        for idx, val in (coeffs or {}).items():
            idx = tuple(int(i) for i in idx)
            if any(i not in range(4) for i in idx):
                raise ValueError(f"frame indices must be in 0..3, got {idx}")
            sign, key = _sort_sign(idx)
            if sign == 0:
                continue
            m = _as_coefficient(val)
            if key in c:
                c[key] = c[key] + sign * m
            else:
                c[key] = sign * m
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "CliffordForm":
        f = cls.__new__(cls)
        f._c = c
        return f

    @property
    def coefficients(self) -> dict[tuple[int, ...], np.ndarray]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, idx) -> np.ndarray:
        sign, key = _sort_sign(tuple(idx))
        if sign == 0 or key not in self._c:
            return np.zeros((4, 4), dtype=complex)
        return sign * self._c[key]

    def degrees(self) -> set[int]:
        return {len(k) for k, v in self._c.items() if np.any(v != 0)}

    def pure_degree(self) -> int | None:
        d = self.degrees()
        if len(d) > 1:
            return None
        return d.pop() if d else None

    def degree_part(self, p: int) -> "CliffordForm":
        return CliffordForm._raw({k: v for k, v in self._c.items() if len(k) == p})

    def __add__(self, other: "CliffordForm") -> "CliffordForm":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c[k] + v if k in c else v
        return CliffordForm._raw(c)

    def __neg__(self) -> "CliffordForm":
        return CliffordForm._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "CliffordForm") -> "CliffordForm":
        return self + (-other)

    def __mul__(self, scalar) -> "CliffordForm":
        return CliffordForm._raw({k: scalar * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def clifford_right(self, m) -> "CliffordForm":
        """Right-multiply every coefficient by the Clifford element ``m``."""
        m = np.asarray(m)
        return CliffordForm._raw({k: v @ m for k, v in self._c.items()})

    def clifford_left(self, m) -> "CliffordForm":
        m = np.asarray(m)
        return CliffordForm._raw({k: m @ v for k, v in self._c.items()})

    def max_abs(self) -> float:
        return max((float(np.max(np.abs(v))) for v in self._c.values()), default=0.0)

    def allclose(self, other: "CliffordForm", atol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= atol

    def scalar_coefficients(self) -> dict[tuple[int, ...], complex]:
        """Coefficients as numbers; raises if any coefficient is not a multiple of 1."""
        out = {}
        for k, v in self._c.items():
            if not is_scalar(v):
                raise ValueError(f"coefficient at {k} is not a scalar Clifford element")
            out[k] = complex(v[0, 0])
        return out

    def __repr__(self) -> str:
        terms = ", ".join(str(k) for k in sorted(self._c, key=lambda k: (len(k), k)))
        return f"CliffordForm({terms})"


def _as_coefficient(val) -> np.ndarray:
    a = np.asarray(val, dtype=complex)
    if a.shape == ():
        return a * IDENTITY
    if a.shape != (4, 4):
        raise ValueError(f"coefficient must be a scalar or a 4x4 matrix, got shape {a.shape}")
    return a


def scalar_form(coeffs: Mapping[tuple[int, ...], complex]) -> CliffordForm:
    return CliffordForm({k: complex(v) for k, v in coeffs.items()})


def theta(*idx: int) -> CliffordForm:
    """Basis monomial theta^{i1} ^ ... ^ theta^{ip} with unit scalar coefficient."""
    return CliffordForm({tuple(idx): 1.0})


def coframe() -> CliffordForm:
    """The Clifford-valued 1-form theta = sum_a theta^a (x) gamma_a."""
    return CliffordForm({(a,): gamma(a) for a in range(4)})


def wedge(phi: CliffordForm, gam: CliffordForm) -> CliffordForm:
    """(Phi^I ^ Gamma^J) (x) gamma_I gamma_J."""
    out: dict[tuple[int, ...], np.ndarray] = {}
    for i, a in phi._c.items():
        for j, b in gam._c.items():
            sign, key = _sort_sign(i + j)
            if sign == 0:
                continue
            term = a @ b
            if sign < 0:
                term = -term
            out[key] = out[key] + term if key in out else term
    return CliffordForm._raw(out)


def metric_sign(idx: tuple[int, ...]) -> float:
    """G(theta^I, theta^I) for a basis monomial."""
    return float(np.prod([ETA[i, i] for i in idx])) if idx else 1.0


def form_inner(xi: CliffordForm, zeta: CliffordForm) -> complex:
    """Metric G extended to scalar forms (bilinear, no complex conjugation)."""
    a, b = xi.scalar_coefficients(), zeta.scalar_coefficients()
    return sum((a[k] * b[k] * metric_sign(k) for k in a if k in b), 0j)


def hodge_star(xi: CliffordForm) -> CliffordForm:
    """Hodge dual of a pure-degree form with scalar coefficients."""
    if xi.pure_degree() is None and xi.degrees():
        raise ValueError("hodge_star needs a pure-degree form")
    coeffs = xi.scalar_coefficients()
    out = {}
    for idx, v in coeffs.items():
        comp = tuple(i for i in range(4) if i not in idx)
        sign, _ = _sort_sign(idx + comp)
        out[comp] = out.get(comp, 0) + v * metric_sign(idx) * sign
    return scalar_form(out)


def interior(a: int, xi: CliffordForm) -> CliffordForm:
    """Contraction e_a -| xi with the frame vector dual to theta^a."""
    if a not in range(4):
        raise IndexError(f"frame index must be in 0..3, got {a!r}")
    out: dict[tuple[int, ...], np.ndarray] = {}
    for idx, v in xi.items():
        if a in idx:
            k = idx.index(a)
            key = idx[:k] + idx[k + 1:]
            term = v if k % 2 == 0 else -v
            out[key] = out[key] + term if key in out else term
    return CliffordForm._raw(out)


def top_coefficient(f: CliffordForm) -> np.ndarray:
    """Clifford coefficient of tau in ``f``."""
    return f[VOLUME]


def two_form(vec) -> CliffordForm:
    """Real 2-form from 6 coefficients ordered (01, 02, 03, 12, 13, 23)."""
    vec = np.asarray(vec, dtype=float).reshape(6)
    return scalar_form({p: vec[i] for i, p in enumerate(TWO_FORM_BASIS)})


def two_form_vector(f: CliffordForm) -> np.ndarray:
    c = f.scalar_coefficients()
    if any(len(k) != 2 for k in c):
        raise ValueError("not a 2-form")
    vals = np.array([c.get(p, 0.0) for p in TWO_FORM_BASIS])
    return vals.real


def one_form_vector(f: CliffordForm) -> np.ndarray:
    c = f.scalar_coefficients()
    if any(len(k) != 1 for k in c):
        raise ValueError("not a 1-form")
    return np.array([c.get((a,), 0.0) for a in range(4)]).real


@dataclass(frozen=True)
class CurvatureSample:
    """Curvature 2-forms Omega^{ab} for a<b; row i of ``Omega`` is pair TWO_FORM_BASIS[i]."""

    Omega: np.ndarray

    def __post_init__(self):
        arr = np.array(self.Omega, dtype=float)
        if arr.shape != (6, 6):
            raise ValueError(f"Omega must have shape (6, 6), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("curvature coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "Omega", arr)

    def upper(self, a: int, b: int) -> CliffordForm:
        """Omega^{ab} for any ordered pair (antisymmetric)."""
        if a == b:
            return CliffordForm()
        if a < b:
            return two_form(self.Omega[TWO_FORM_BASIS.index((a, b))])
        return -1.0 * self.upper(b, a)

    def lower(self, a: int, b: int) -> CliffordForm:
        return (ETA[a, a] * ETA[b, b]) * self.upper(a, b)

    def clifford(self) -> CliffordForm:
        """Omega = (1/4) Omega^{ab} (x) gamma_ab, summed over all ordered pairs."""
        out = CliffordForm()
        for i, (a, b) in enumerate(TWO_FORM_BASIS):
            # both orderings of (a, b) give the same contribution
            out = out + two_form(self.Omega[i]).clifford_right(0.5 * gamma_ab(a, b))
        return out

    def __mul__(self, c: float) -> "CurvatureSample":
        return CurvatureSample(c * self.Omega)

    __rmul__ = __mul__

    def __add__(self, other: "CurvatureSample") -> "CurvatureSample":
        return CurvatureSample(self.Omega + other.Omega)


@dataclass(frozen=True)
class TorsionSample:
    """Torsion 2-forms Theta^a; row a of ``Theta`` holds 6 coefficients."""

    Theta: np.ndarray

    def __post_init__(self):
        arr = np.array(self.Theta, dtype=float)
        if arr.shape != (4, 6):
            raise ValueError(f"Theta must have shape (4, 6), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("torsion coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "Theta", arr)

    @classmethod
    def zero(cls) -> "TorsionSample":
        return cls(np.zeros((4, 6)))

    @classmethod
    def from_forms(cls, forms) -> "TorsionSample":
        return cls(np.stack([two_form_vector(f) for f in forms]))

    def upper(self, a: int) -> CliffordForm:
        return two_form(self.Theta[a])

    def lower(self, a: int) -> CliffordForm:
        return ETA[a, a] * self.upper(a)

    def __add__(self, other: "TorsionSample") -> "TorsionSample":
        return TorsionSample(self.Theta + other.Theta)

    def __sub__(self, other: "TorsionSample") -> "TorsionSample":
        return TorsionSample(self.Theta - other.Theta)


def torsion_trace(t: TorsionSample) -> CliffordForm:
    """Trace 1-form sum_b e_b -| Theta^b."""
    out = CliffordForm()
    for b in range(4):
        out = out + interior(b, t.upper(b))
    return out


def axial_torsion(t: TorsionSample) -> CliffordForm:
    """Axial 1-form a = *(Theta_b ^ theta^b)."""
    three = CliffordForm()
    for b in range(4):
        three = three + wedge(t.lower(b), theta(b))
    return hodge_star(three) if three.items() else CliffordForm()


def torsion_decompose(t: TorsionSample) -> tuple[TorsionSample, TorsionSample, TorsionSample]:
    """Irreducible parts (tentor, trator, axitor).

    trator^a = (1/3) theta^a ^ (e_b -| Theta^b), axitor^a = -(1/3) *(theta^a ^ a),
    tentor = Theta - trator - axitor.
    """
    tr = torsion_trace(t)
    ax = axial_torsion(t)
    trator, axitor = [], []
    for a in range(4):
        trator.append((1.0 / 3.0) * wedge(theta(a), tr))
        w = wedge(theta(a), ax)
        axitor.append((-1.0 / 3.0) * hodge_star(w) if w.items() else CliffordForm())
    t2 = TorsionSample.from_forms(trator)
    t3 = TorsionSample.from_forms(axitor)
    return t - t2 - t3, t2, t3


def eh_term(omega: CurvatureSample) -> float:
    """Coefficient of tau in sum_{a,b} Omega_ab ^ *(theta^a ^ theta^b)."""
    total = 0j
    for a, b in itertools.permutations(range(4), 2):
        total += top_coefficient(wedge(omega.lower(a, b), hodge_star(theta(a, b))))[0, 0]
    return float(total.real)


def ep_term(omega: CurvatureSample) -> float:
    """Coefficient of tau in sum_{a,b} Omega_ab ^ theta^a ^ theta^b."""
    total = 0j
    for a, b in itertools.permutations(range(4), 2):
        total += top_coefficient(wedge(omega.lower(a, b), theta(a, b)))[0, 0]
    return float(total.real)


def eh_density(omega: CurvatureSample) -> float:
    """Einstein-Hilbert density -Omega_ab ^ *(theta^a ^ theta^b), as a multiple of tau."""
    return -eh_term(omega)


def ep_density(omega: CurvatureSample) -> float:
    """Einstein-Palatini density -Omega_ab ^ theta^a ^ theta^b, as a multiple of tau."""
    return -ep_term(omega)


def qsl_curvature_matrix(omega: CurvatureSample, insert=None) -> np.ndarray:
    """Clifford coefficient of tau in theta ^ (Omega insert) ^ theta."""
    ins = QSL_INSERT if insert is None else np.asarray(insert)
    th = coframe()
    return top_coefficient(wedge(wedge(th, omega.clifford().clifford_right(ins)), th))


def qsl_curvature_term(psi, omega: CurvatureSample, insert=None, threshold: float = 1e-8) -> float:
    """Non-derivative term 2 Psibar ^ Omega g5 ^ Psi of the quadratic spinor
    Lagrangian for Psi = theta psi, as a multiple of tau.

    ``insert`` replaces the element between curvature and coframe; the
    default is :data:`QSL_INSERT`. With it the result equals
    sigma * eh_density + chi * ep_density.
    """
    psi = as_spinor(psi)
    val = 2.0 * (dirac_dual(psi) @ qsl_curvature_matrix(omega, insert) @ psi)
    scale = float(np.vdot(psi, psi).real) * max(float(np.max(np.abs(omega.Omega))), 1.0)
    if abs(val.imag) > threshold * scale:
        raise ImaginaryResidue("qsl curvature term", abs(val.imag), threshold * scale)
    return float(val.real)


def immirzi(psi, tol: float = 1e-9) -> float:
    """sigma / chi; undefined (raises) when |chi| < tol |psi|^2."""
    psi = as_spinor(psi)
    cov = bilinears(psi)
    n2 = float(np.vdot(psi, psi).real)
    if abs(cov.chi) < tol * n2:
        raise ImmirziUndefined(f"chi = {cov.chi:.3e} vanishes at tolerance {tol:.1e}")
    return cov.sigma / cov.chi


@dataclass(frozen=True)
class HolstDensity:
    value: float
    immirzi: float


def holst_value(psi, omega: CurvatureSample) -> float:
    """sigma * Omega_ab ^ *(theta^a theta^b) + chi * Omega_ab ^ theta^a theta^b.

    Equals -qsl_curvature_term(psi, omega) with the default insert.
    """
    cov = bilinears(psi)
    return cov.sigma * eh_term(omega) + cov.chi * ep_term(omega)


def holst_density(psi, omega: CurvatureSample, tol: float = 1e-9) -> HolstDensity:
    return HolstDensity(holst_value(psi, omega), immirzi(psi, tol))
