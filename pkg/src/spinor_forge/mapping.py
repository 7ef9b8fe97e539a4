"""Necessary conditions for leading a Dirac spinor to an ELKO, and the map itself.

All residuals are left-hand sides of conditions whose right-hand sides are zero,
written with Re/Im of psi_i^* psi_j using 1-based component labels in the
docstrings and 0-based indices in code.

Note that Re(psi_1^* psi_3) + Re(psi_2^* psi_4) = sigma / 2 in the chiral
representation, so the first two common conditions already force sigma = 0;
no class-1 or class-2 spinor can satisfy the full common set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .elko import ElkoSpinor, Momentum, boost, lower_helicity, rest_helicity_spinor, wigner_flip
from .errors import ConjugacyUndetermined, InconsistentCovariants, NotMappable, ZeroSpinor
from .lounesto import LounestoClass, classify
from .spinors import as_spinor, charge_conjugate, sigma_dot

DEFAULT_TOL = 1e-9


def _re(psi, i, j) -> float:
    return float((np.conj(psi[i]) * psi[j]).real)


def _im(psi, i, j) -> float:
    return float((np.conj(psi[i]) * psi[j]).imag)


def common_conditions(psi) -> np.ndarray:
    """[Re(1*3), Re(2*4), Re(2*3)+Re(1*4), Im(1*4)-Im(2*3)-2Im(3*4)-2Im(1*2)]."""
    x = as_spinor(psi)
    return np.array([
        _re(x, 0, 2),
        _re(x, 1, 3),
        _re(x, 1, 2) + _re(x, 0, 3),
        _im(x, 0, 3) - _im(x, 1, 2) - 2 * _im(x, 2, 3) - 2 * _im(x, 0, 1),
    ])


def ad2_residual(psi) -> float:
    """Re(psi_1^* psi_4) + Im(psi_2^* psi_3)."""
    x = as_spinor(psi)
    return _re(x, 0, 3) + _im(x, 1, 2)


def ad3_residual(psi) -> float:
    """Im(psi_1^* psi_4) - Im(psi_2^* psi_3) - 2 Im(psi_1^* psi_2)."""
    x = as_spinor(psi)
    return _im(x, 0, 3) - _im(x, 1, 2) - 2 * _im(x, 0, 1)


def class_conditions(psi, class_id: int) -> list[float]:
    """Extra residuals per class; class 1 carries both the class-2 and class-3 sets."""
    if class_id == 2:
        return [ad2_residual(psi)]
    if class_id == 3:
        return [ad3_residual(psi)]
    if class_id == 1:
        return class_conditions(psi, 2) + class_conditions(psi, 3)
    raise ValueError(f"class_id must be 1, 2 or 3, got {class_id!r}")


# Component forms, using Re(psi_i^* psi_j) = a_i a_j + b_i b_j and
# Im(psi_i^* psi_j) = a_i b_j - b_i a_j with psi_j = a_j + i b_j.

def _rc(a, b, i, j):
    return a[i] * a[j] + b[i] * b[j]


def _ic(a, b, i, j):
    return a[i] * b[j] - b[i] * a[j]


def component_common(psi) -> np.ndarray:
    x = as_spinor(psi)
    a, b = x.real, x.imag
    c1 = a[0] * a[2] + b[0] * b[2]
    c2 = a[1] * a[3] + b[1] * b[3]
    return np.array([
        c1,
        c2,
        _rc(a, b, 1, 2) + _rc(a, b, 0, 3),
        _ic(a, b, 0, 3) - _ic(a, b, 1, 2) - 2 * _ic(a, b, 2, 3) - 2 * _ic(a, b, 0, 1),
    ])


def component_ad2(psi) -> float:
    x = as_spinor(psi)
    a, b = x.real, x.imag
    return float(_rc(a, b, 0, 3) + _ic(a, b, 1, 2))


def component_ad3(psi) -> float:
    x = as_spinor(psi)
    a, b = x.real, x.imag
    return float(_ic(a, b, 0, 3) - _ic(a, b, 1, 2) - 2 * _ic(a, b, 0, 1))


def table1_residuals(psi) -> dict[str, list[float]]:
    """The tabulated per-class component conditions, term by term."""
    x = as_spinor(psi)
    a, b = x.real, x.imag
    # a[k], b[k] are psi_{k+1,a}, psi_{k+1,b}
    row13_first = a[1] * (a[2] - b[2]) + b[1] * (a[2] + b[2])
    im34 = a[2] * b[3] - b[2] * a[3]
    row2_second = a[1] * a[2] + b[1] * b[2] + a[0] * a[3] + b[0] * b[3]
    row3_second = (
        (a[0] * b[3] - b[0] * a[3])
        - (a[1] * b[2] - b[1] * a[2])
        - 2 * (a[2] * b[3] - b[2] * a[3])
        - 2 * (a[0] * b[1] - b[0] * a[1])
    )
    return {
        "1": [float(row13_first), float(im34)],
        "2": [float(im34), float(row2_second)],
        "3": [float(row13_first), float(row3_second)],
    }


def table1_discrepancy(psi) -> dict[str, float]:
    """Differences between tabulated rows and the complex-form class conditions.

    Row 2 is compared with the class-2 extra condition, row 3 with the class-3
    one and row 1 with both. Non-zero values mean the tabulated polynomials
    differ from the complex forms for this input.
    """
    t = table1_residuals(psi)
    r2, r3 = ad2_residual(psi), ad3_residual(psi)
    return {
        "1": float(max(abs(t["1"][0] - r2), abs(t["1"][1] - r3))),
        "2": float(min(abs(t["2"][0] - r2), abs(t["2"][1] - r2))),
        "3": float(min(abs(t["3"][0] - r3), abs(t["3"][1] - r3))),
    }


@dataclass(frozen=True)
class MappingResiduals:
    common: np.ndarray = field(repr=False)
    class2_extra: float
    class3_extra: tuple[float, float]
    table1: dict[str, list[float]]

    def max_for_class(self, class_id: int) -> float:
        vals = list(np.abs(self.common))
        if class_id in (1, 2):
            vals.append(abs(self.class2_extra))
        if class_id in (1, 3):
            vals.append(abs(self.class3_extra[0]))
        return float(max(vals))


def mapping_residuals(psi, normalize: bool = True) -> MappingResiduals:
    x = as_spinor(psi)
    if normalize:
        n = np.linalg.norm(x)
        if n > 0:
            x = x / n
    t1 = table1_residuals(x)
    return MappingResiduals(
        common=common_conditions(x),
        class2_extra=ad2_residual(x),
        class3_extra=(ad3_residual(x), t1["3"][0]),
        table1=t1,
    )


@dataclass(frozen=True)
class MappingVerdict:
    mappable: bool
    class_id: int
    max_residual: float
    detected_class: int | None
    residuals: MappingResiduals = field(repr=False)


def _detect_class(psi, tol) -> int | None:
    try:
        return int(classify(psi, tol).klass)
    except InconsistentCovariants:
        return None


def is_mappable(psi, class_id: int, tol: float = DEFAULT_TOL) -> MappingVerdict:
    """True iff every residual for ``class_id`` is below ``tol`` (unit-normalized
    input) and the spinor actually belongs to that class."""
    if class_id not in (1, 2, 3):
        raise ValueError(f"class_id must be 1, 2 or 3, got {class_id!r}")
    x = as_spinor(psi)
    n = float(np.linalg.norm(x))
    if n <= tol:
        raise ZeroSpinor(f"spinor norm {n:.3e} is below tolerance {tol:.3e}")
    res = mapping_residuals(x)
    worst = res.max_for_class(class_id)
    detected = _detect_class(x, tol)
    return MappingVerdict(worst < tol and detected == class_id, class_id, worst, detected, res)


def mapping_report(psi, tol: float = DEFAULT_TOL) -> dict:
    verdicts = {c: is_mappable(psi, c, tol) for c in (1, 2, 3)}
    res = verdicts[1].residuals
    return {
        "common_residuals": [float(v) for v in res.common],
        "class2": float(res.class2_extra),
        "class3": float(res.class3_extra[0]),
        "table1": res.table1,
        "mappable": {str(c): bool(v.mappable) for c, v in verdicts.items()},
        "class": verdicts[1].detected_class,
        "tolerance": float(tol),
    }


@dataclass(frozen=True)
class WeylConstruction:
    psi: np.ndarray
    defect: float


def dsf_from_weyl(phi_l, epsilon: complex, momentum: Momentum) -> WeylConstruction:
    """psi = (epsilon sigma_2 phi_L^*, phi_L), plus the defect
    ||epsilon sigma_2 phi_L^* - ((E + sigma.p)/m) phi_L|| against the
    momentum-space Dirac relation phi_R = ((E + sigma.p)/m) phi_L."""
    phi_l = np.asarray(phi_l, dtype=complex).reshape(2)
    if np.linalg.norm(phi_l) == 0:
        raise ValueError("phi_L must be nonzero")
    if abs(abs(epsilon) - 1.0) > 1e-12:
        raise ValueError(f"epsilon must be unimodular, got |epsilon| = {abs(epsilon)!r}")
    upper = epsilon * wigner_flip(phi_l)
    dirac_upper = (momentum.energy * np.eye(2) + sigma_dot(momentum.p_vec)) @ phi_l / momentum.m
    return WeylConstruction(np.concatenate([upper, phi_l]), float(np.linalg.norm(upper - dirac_upper)))


def _block_sign(x: np.ndarray, tol: float) -> int | None:
    """+1/-1 if x = (+/- sigma_2 phi^*, phi) to tolerance, else None."""
    flip = wigner_flip(x[2:])
    scale = max(np.linalg.norm(x), 1.0e-300)
    for s in (1, -1):
        if np.linalg.norm(x[:2] - s * flip) < tol * scale:
            return s
    return None


def elko_from_dsf(psi, tol: float = DEFAULT_TOL, momentum: Momentum | None = None) -> ElkoSpinor:
    """Lead ``psi`` to an ELKO (sigma_2 phi_L^*, phi_L) using its left-handed block.

    Inputs already of ELKO block form keep their sign and conjugacy type.
    Otherwise the spinor must be mappable for some class in {1, 2, 3}.
    With ``momentum`` the helicity pair is detected and the output is
    sign-aligned with the standard rest-phase convention when the ratio
    is real; ``phase_matched`` records whether that succeeded.
    """
    x = as_spinor(psi)
    n = float(np.linalg.norm(x))
    if n <= tol:
        raise ZeroSpinor(f"spinor norm {n:.3e} is below tolerance {tol:.3e}")
    sign = _block_sign(x, tol)
    if sign is not None:
        lam = x.copy()
    else:
        verdicts = [is_mappable(x, c, tol) for c in (1, 2, 3)]
        if not any(v.mappable for v in verdicts):
            raise NotMappable(
                "spinor satisfies no class condition set",
                {str(v.class_id): v.max_residual for v in verdicts},
            )
        phi_l = x[2:]
        if np.linalg.norm(phi_l) <= tol * n:
            raise NotMappable("left-handed block vanishes")
        lam = np.concatenate([wigner_flip(phi_l), phi_l])
        sign = 1

    c_lam = charge_conjugate(lam)
    scale = np.linalg.norm(lam)
    if np.linalg.norm(c_lam - lam) < 1e-10 * scale:
        ct = "S"
    elif np.linalg.norm(c_lam + lam) < 1e-10 * scale:
        ct = "A"
    else:
        raise ConjugacyUndetermined("C lambda is not +/- lambda")
    if classify(lam, tol).klass != LounestoClass.FLAGPOLE:
        raise NotMappable("result is not a flagpole spinor")

    pair = None
    matched = None
    if momentum is not None:
        pair, lam, matched = _align_to_convention(lam, momentum)
    lam.flags.writeable = False
    return ElkoSpinor(lam, ct, pair, momentum, phase_matched=matched)


def _align_to_convention(lam: np.ndarray, momentum: Momentum):
    phi = lam[2:]
    p_hat = momentum.p_hat
    pair = None
    for pr in ("-+", "+-"):
        h = lower_helicity(pr)
        if np.linalg.norm(sigma_dot(p_hat) @ phi - h * phi) < 1e-10 * max(np.linalg.norm(phi), 1e-300):
            pair = pr
            break
    if pair is None:
        return None, lam, False
    ref = boost(
        np.concatenate([np.zeros(2), rest_helicity_spinor(lower_helicity(pair), momentum.theta, momentum.phi, momentum.m)]),
        momentum,
    )[2:]
    ratio = np.vdot(ref, phi) / np.vdot(ref, ref)
    if abs(ratio.imag) > 1e-10 * abs(ratio):
        return pair, lam, False
    if ratio.real < 0:
        lam = -lam
    return pair, lam, True
