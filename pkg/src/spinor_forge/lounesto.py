"""Lounesto's six-class partition of spinors by the zero pattern of their covariants."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InconsistentCovariants, ZeroSpinor
from .spinors import BilinearCovariants, as_spinor, bilinears

DEFAULT_TOL = 1e-9


class LounestoClass(enum.IntEnum):
    DIRAC_1 = 1
    DIRAC_2 = 2
    DIRAC_3 = 3
    FLAG_DIPOLE = 4
    FLAGPOLE = 5
    WEYL = 6

    @property
    def label(self) -> str:
        return _NAMES[self]

    @property
    def is_dirac(self) -> bool:
        return self <= 3


_NAMES = {
    LounestoClass.DIRAC_1: "dirac-1",
    LounestoClass.DIRAC_2: "dirac-2",
    LounestoClass.DIRAC_3: "dirac-3",
    LounestoClass.FLAG_DIPOLE: "flag-dipole",
    LounestoClass.FLAGPOLE: "flagpole",
    LounestoClass.WEYL: "weyl",
}

_ACTIONS = {
    LounestoClass.DIRAC_1: "holst",
    LounestoClass.DIRAC_2: "einstein-hilbert",
    LounestoClass.DIRAC_3: "einstein-palatini",
}


@dataclass(frozen=True)
class ClassificationResult:
    klass: LounestoClass
    covariants: BilinearCovariants
    zero_flags: dict[str, bool]
    tolerance: float

    def as_dict(self) -> dict:
        d = {"class": int(self.klass), "name": self.klass.label}
        d.update(self.covariants.as_dict())
        d["zero_flags"] = dict(self.zero_flags)
        d["tolerance"] = float(self.tolerance)
        return d


def zero_flags(cov: BilinearCovariants, tol: float) -> dict[str, bool]:
    """A covariant counts as zero iff its max-abs component is below ``tol``."""
    return {
        "sigma": abs(cov.sigma) < tol,
        "chi": abs(cov.chi) < tol,
        "J": float(np.max(np.abs(cov.J))) < tol,
        "K": float(np.max(np.abs(cov.K))) < tol,
        "S": float(np.max(np.abs(cov.S))) < tol,
    }


def class_from_flags(flags: dict[str, bool]) -> LounestoClass:
    if flags["J"]:
        raise InconsistentCovariants("current J vanishes for a nonzero spinor", flags)
    s0, c0 = flags["sigma"], flags["chi"]
    if not (s0 and c0):
        if flags["K"] or flags["S"]:
            raise InconsistentCovariants("sigma or chi nonzero but K or S zero", flags)
        if not s0 and not c0:
            return LounestoClass.DIRAC_1
        return LounestoClass.DIRAC_2 if c0 else LounestoClass.DIRAC_3
    k0, s_0 = flags["K"], flags["S"]
    if not k0 and not s_0:
        return LounestoClass.FLAG_DIPOLE
    if k0 and not s_0:
        return LounestoClass.FLAGPOLE
    if not k0 and s_0:
        return LounestoClass.WEYL
    raise InconsistentCovariants("sigma = chi = 0 with K = 0 and S = 0", flags)


def classify(psi, tol: float = DEFAULT_TOL) -> ClassificationResult:
    """Normalize ``psi`` to unit Euclidean norm and return its Lounesto class."""
    psi = as_spinor(psi)
    n = float(np.linalg.norm(psi))
    if n <= tol:
        raise ZeroSpinor(f"spinor norm {n:.3e} is below tolerance {tol:.3e}")
    cov = bilinears(psi / n)
    flags = zero_flags(cov, tol)
    return ClassificationResult(class_from_flags(flags), cov, flags, tol)


def class_of_action(klass: LounestoClass | int) -> str:
    """Gravity action tag carried by a Dirac-type class; 'none' for classes 4-6."""
    return _ACTIONS.get(LounestoClass(klass), "none")
