"""Seeded identity sweeps producing :class:`VerificationReport` records.

Each sample draws from its own PCG64 stream spawned from
``SeedSequence(seed)``, so results depend only on (suite, seed, samples).
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .elko import Momentum, dual_norm, elko_family
from .errors import SpinorForgeError
from .forms import (
    CurvatureSample,
    TorsionSample,
    eh_density,
    ep_density,
    form_inner,
    holst_value,
    hodge_star,
    immirzi,
    qsl_curvature_term,
    theta,
    top_coefficient,
    torsion_decompose,
    wedge,
)
from .lounesto import LounestoClass, classify
from .spinors import bilinears, charge_conjugate, fierz_residuals, minkowski_square

# Stand-in residual for a categorical failure (wrong class, exception).
CATEGORICAL_FAILURE = 1.0


@dataclass
class VerificationReport:
    suite: str
    seed: int
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    failures: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def sample_rngs(seed: int, samples: int) -> list[np.random.Generator]:
    children = np.random.SeedSequence(seed).spawn(samples)
    return [np.random.Generator(np.random.PCG64(s)) for s in children]


def digest(*arrays) -> str:
    h = hashlib.sha256()
    for a in arrays:
        h.update(np.ascontiguousarray(np.asarray(a, dtype=complex)).tobytes())
    return h.hexdigest()[:16]


def random_spinor(rng: np.random.Generator) -> np.ndarray:
    """I.i.d. standard complex Gaussian components."""
    return (rng.standard_normal(4) + 1j * rng.standard_normal(4)) / np.sqrt(2)


def random_curvature(rng: np.random.Generator) -> CurvatureSample:
    return CurvatureSample(rng.standard_normal((6, 6)))


def random_torsion(rng: np.random.Generator) -> TorsionSample:
    return TorsionSample(rng.standard_normal((4, 6)))


def random_momentum(rng: np.random.Generator) -> Momentum:
    return Momentum(
        m=float(rng.uniform(0.1, 10.0)),
        p_mag=float(rng.uniform(0.0, 10.0)),
        theta=float(rng.uniform(0.0, np.pi)),
        phi=float(rng.uniform(0.0, 2 * np.pi)),
    )


def _qsl_holst(rng):
    psi, om = random_spinor(rng), random_curvature(rng)
    cov = bilinears(psi)
    q = qsl_curvature_term(psi, om)
    expect = cov.sigma * eh_density(om) + cov.chi * ep_density(om)
    scale = max(abs(cov.sigma * eh_density(om)) + abs(cov.chi * ep_density(om)), 1.0)
    res = max(abs(q - expect), abs(holst_value(psi, om) + q)) / scale
    res = max(res, abs(immirzi(psi) - cov.sigma / cov.chi) / max(abs(cov.sigma / cov.chi), 1.0))
    return res, (psi, om.Omega)


def _torsion(rng):
    t = random_torsion(rng)
    parts = torsion_decompose(t)
    res = float(np.max(np.abs(sum(p.Theta for p in parts) - t.Theta)))
    for k, part in enumerate(parts):
        again = torsion_decompose(part)
        for j, q in enumerate(again):
            target = part.Theta if j == k else 0.0
            res = max(res, float(np.max(np.abs(q.Theta - target))))
    return res, (t.Theta,)


def _fpk(rng):
    psi = random_spinor(rng)
    cov = bilinears(psi)
    n4 = float(np.vdot(psi, psi).real) ** 2
    return max(abs(r) for r in fierz_residuals(cov)) / n4, (psi,)


def _elko_family(rng):
    mom = random_momentum(rng)
    fam = elko_family(mom)
    res = 0.0
    for (ct, _), lam in fam.items():
        psi = lam.psi
        n = np.linalg.norm(psi)
        sign = 1.0 if ct == "S" else -1.0
        res = max(res, np.linalg.norm(charge_conjugate(psi) - sign * psi) / n)
        try:
            c = classify(psi)
        except SpinorForgeError:
            return CATEGORICAL_FAILURE, (mom.m, mom.p_mag, mom.theta, mom.phi)
        if c.klass != LounestoClass.FLAGPOLE or np.max(np.abs(c.covariants.S)) <= 1e-3:
            return CATEGORICAL_FAILURE, (mom.m, mom.p_mag, mom.theta, mom.phi)
        cv = c.covariants
        res = max(res, abs(cv.sigma), abs(cv.chi), float(np.max(np.abs(cv.K))))
        res = max(res, abs(minkowski_square(cv.J)), abs(minkowski_square(cv.K)))
        nrm = dual_norm(lam, fam)
        res = max(res, abs(nrm.imag) / (2 * mom.m), abs(nrm.real - sign * 2 * mom.m) / (2 * mom.m))
    return float(res), (mom.m, mom.p_mag, mom.theta, mom.phi)


SUITES: dict[str, tuple[Callable, float]] = {
    "qsl-holst": (_qsl_holst, 1e-10),
    "torsion": (_torsion, 1e-12),
    "fpk": (_fpk, 1e-9),
    "elko-family": (_elko_family, 1e-9),
}
HODGE_TOL = 1e-12
SUITE_NAMES = ("qsl-holst", "hodge", "torsion", "fpk", "elko-family", "all")


def hodge_pairs():
    """All (xi, zeta) pairs of basis monomials of equal degree."""
    for p in range(5):
        monos = list(itertools.combinations(range(4), p))
        for i, j in itertools.product(monos, repeat=2):
            yield i, j


def hodge_residual(i: tuple[int, ...], j: tuple[int, ...]) -> float:
    xi, zeta = theta(*i), theta(*j)
    lhs = wedge(xi, hodge_star(zeta))
    rhs = form_inner(xi, zeta)
    top = top_coefficient(lhs)
    return float(np.max(np.abs(top - rhs * np.eye(4))))


def run_hodge(seed: int, samples: int, tol: float | None = None) -> VerificationReport:
    tol = HODGE_TOL if tol is None else tol
    worst, failures, n = 0.0, [], 0
    for k, (i, j) in enumerate(hodge_pairs()):
        r = hodge_residual(i, j)
        n += 1
        worst = max(worst, r)
        if not r < tol:
            failures.append({"sample_index": k, "residual": r, "inputs_digest": f"{i}|{j}"})
    return VerificationReport("hodge", seed, n, worst, tol, worst < tol, failures)


def run_suite(name: str, seed: int = 0, samples: int = 100, tol: float | None = None) -> VerificationReport:
    if name == "hodge":
        return run_hodge(seed, samples, tol)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    fn, default_tol = SUITES[name]
    tol = default_tol if tol is None else tol
    worst, failures = 0.0, []
    for k, rng in enumerate(sample_rngs(seed, samples)):
        try:
            r, inputs = fn(rng)
        except SpinorForgeError:
            r, inputs = CATEGORICAL_FAILURE, ()
        r = float(r)
        worst = max(worst, r)
        if not r < tol:
            failures.append({"sample_index": k, "residual": r, "inputs_digest": digest(*inputs)})
    return VerificationReport(name, seed, samples, worst, tol, worst < tol, failures)


def run_all(seed: int = 0, samples: int = 100, tol: float | None = None) -> dict:
    """Run every suite; ``tol`` (if given) overrides each suite's default."""
    reports = [run_suite(n, seed, samples, tol) for n in SUITE_NAMES if n != "all"]
    return {
        "suite": "all",
        "seed": seed,
        "samples": samples,
        "passed": all(r.passed for r in reports),
        "reports": [r.as_dict() for r in reports],
    }
