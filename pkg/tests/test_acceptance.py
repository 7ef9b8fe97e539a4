"""Acceptance criteria, one test (or one test per part) per criterion.

The terminal summary prints a PASS/FAIL line per criterion. Criteria
6a, 6b and 7a assert claims that do not hold for the objects as defined;
they stay red on purpose.
"""

from __future__ import annotations

import itertools
import json
import subprocess
import sys

import numpy as np
import pytest

from spinor_forge.clifford import ETA, IDENTITY, gamma, gamma5
from spinor_forge.elko import Momentum, dual_norm, elko_family
from spinor_forge.errors import ImmirziUndefined
from spinor_forge.forms import (
    CurvatureSample,
    TorsionSample,
    eh_density,
    eh_term,
    ep_density,
    ep_term,
    immirzi,
    qsl_curvature_term,
    torsion_decompose,
)
from spinor_forge.lounesto import LounestoClass, classify
from spinor_forge.mapping import (
    ad2_residual,
    ad3_residual,
    class_conditions,
    common_conditions,
    component_ad2,
    component_ad3,
    component_common,
    is_mappable,
    table1_discrepancy,
)
from spinor_forge.spinors import bilinears, charge_conjugate, minkowski_square
from spinor_forge.verify import hodge_pairs, hodge_residual

SEED = 20240611


def momenta(n, seed=SEED):
    rng = np.random.default_rng(seed)
    return [
        Momentum(rng.uniform(0.1, 10), rng.uniform(0, 10), rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        for _ in range(n)
    ]


def elko_sweep(n=200):
    for mom in momenta(n):
        for key, lam in elko_family(mom).items():
            yield mom, key, lam


def gaussian(rng, n):
    return (rng.standard_normal((n, 4)) + 1j * rng.standard_normal((n, 4))) / np.sqrt(2)


def report(label, worst, tol):
    print(f"{label}: worst {worst:.3e} (tolerance {tol:.0e})")


def test_criterion_1_gamma_algebra():
    for mu, nu in itertools.product(range(4), repeat=2):
        assert np.array_equal(gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu), 2 * ETA[mu, nu] * IDENTITY)
    g5 = -1j * gamma(0) @ gamma(1) @ gamma(2) @ gamma(3)
    assert np.array_equal(g5, gamma5())
    assert np.array_equal(g5, np.diag([1, 1, -1, -1]))


def test_criterion_2_elko_flagpole():
    worst_zero, least_s = 0.0, np.inf
    for _, _, lam in elko_sweep():
        u = lam.psi / np.linalg.norm(lam.psi)
        cov = bilinears(u)
        assert classify(lam.psi).klass == LounestoClass.FLAGPOLE
        worst_zero = max(worst_zero, abs(cov.sigma), abs(cov.chi), np.max(np.abs(cov.K)))
        least_s = min(least_s, np.max(np.abs(cov.S)))
    report("max |sigma|,|chi|,|K|", worst_zero, 1e-9)
    assert worst_zero < 1e-9 and least_s > 1e-3


def test_criterion_3_charge_conjugation():
    worst = 0.0
    for _, (ct, _), lam in elko_sweep():
        sign = 1 if ct == "S" else -1
        worst = max(worst, np.linalg.norm(charge_conjugate(lam.psi) - sign * lam.psi) / np.linalg.norm(lam.psi))
    report("||C lambda -+ lambda|| / ||lambda||", worst, 1e-10)
    assert worst < 1e-10


def test_criterion_4_null_currents():
    worst, least_j = 0.0, np.inf
    for _, _, lam in elko_sweep():
        cov = bilinears(lam.psi / np.linalg.norm(lam.psi))
        worst = max(worst, abs(minkowski_square(cov.J)), abs(minkowski_square(cov.K)))
        least_j = min(least_j, np.max(np.abs(cov.J)))
    report("|J.J|, |K.K|", worst, 1e-9)
    assert worst < 1e-9 and least_j > 1e-3


def test_criterion_5_dual_norms():
    worst_imag = 0.0
    for mom in momenta(200):
        fam = elko_family(mom)
        norms = [dual_norm(lam, fam) for lam in fam.values()]
        worst_imag = max(worst_imag, max(abs(n.imag) for n in norms))
        assert sum(n.real > 0 for n in norms) == 2 and sum(n.real < 0 for n in norms) == 2
    report("max |Im norm|", worst_imag, 1e-10)
    assert worst_imag < 1e-10
    for m in (0.3, 1.0, 7.5):
        fam = elko_family(Momentum(m))
        for lam in fam.values():
            assert abs(abs(dual_norm(lam, fam)) - 2 * m) < 1e-10


def test_criterion_6a_elko_mapping_residuals():
    worst = 0.0
    for _, _, lam in elko_sweep():
        u = lam.psi / np.linalg.norm(lam.psi)
        res = list(common_conditions(u)) + class_conditions(u, 1)
        worst = max(worst, max(abs(r) for r in res))
    report("ELKO mapping residual", worst, 1e-10)
    assert worst < 1e-10


def test_criterion_6b_component_forms():
    rng = np.random.default_rng(SEED)
    worst_components, worst_table = 0.0, 0.0
    for psi in gaussian(rng, 500):
        worst_components = max(
            worst_components,
            np.max(np.abs(component_common(psi) - common_conditions(psi))),
            abs(component_ad2(psi) - ad2_residual(psi)),
            abs(component_ad3(psi) - ad3_residual(psi)),
        )
        worst_table = max(worst_table, max(table1_discrepancy(psi).values()))
    report("component vs complex forms", worst_components, 1e-12)
    report("tabulated rows vs complex forms", worst_table, 1e-12)
    assert worst_components < 1e-12
    assert worst_table < 1e-12


def test_criterion_6c_random_not_mappable():
    rng = np.random.default_rng(SEED)
    negatives = sum(
        not any(is_mappable(psi, c).mappable for c in (1, 2, 3)) for psi in gaussian(rng, 1000)
    )
    print(f"non-mappable random spinors: {negatives}/1000")
    assert negatives >= 999


def qsl_samples(n=200):
    rng = np.random.default_rng(SEED)
    for _ in range(n):
        yield gaussian(rng, 1)[0], CurvatureSample(rng.standard_normal((6, 6)))


def test_criterion_7a_qsl_identity():
    worst = 0.0
    for psi, om in qsl_samples():
        cov = bilinears(psi)
        expect = -cov.sigma * eh_term(om) + cov.chi * ep_term(om)
        worst = max(worst, abs(qsl_curvature_term(psi, om) - expect) / max(abs(expect), 1e-300))
    report("qsl vs -sigma A + chi B (relative)", worst, 1e-10)
    assert worst < 1e-10


def test_criterion_7b_class2_gives_eh():
    psi = np.array([1, 0, 1, 0]) / np.sqrt(2)
    cov = bilinears(psi)
    assert abs(cov.sigma - 1) < 1e-15 and abs(cov.chi) < 1e-15
    worst = 0.0
    for _, om in qsl_samples():
        worst = max(worst, abs(qsl_curvature_term(psi, om) - eh_density(om)) / max(abs(eh_density(om)), 1.0))
    report("class-2 qsl vs EH density", worst, 1e-10)
    assert worst < 1e-10


def test_criterion_7c_class3_gives_ep():
    psi = np.array([1, 0, -1j, 0]) / np.sqrt(2)
    cov = bilinears(psi)
    assert abs(cov.sigma) < 1e-15 and abs(cov.chi - 1) < 1e-15
    worst = 0.0
    for _, om in qsl_samples():
        worst = max(worst, abs(qsl_curvature_term(psi, om) - ep_density(om)) / max(abs(ep_density(om)), 1.0))
    report("class-3 qsl vs EP density", worst, 1e-10)
    assert worst < 1e-10


def test_criterion_8_immirzi():
    rng = np.random.default_rng(SEED)
    for psi in gaussian(rng, 200):
        assert classify(psi).klass == LounestoClass.DIRAC_1
        cov = bilinears(psi)
        assert abs(immirzi(psi) - cov.sigma / cov.chi) <= 1e-12 * max(1.0, abs(cov.sigma / cov.chi))
    for psi in ([1, 0, 1, 0], [0.3, 1j, 0.3, 1j], [2, -1, 2, -1]):
        assert classify(psi).klass == LounestoClass.DIRAC_2
        with pytest.raises(ImmirziUndefined):
            immirzi(psi)


def test_criterion_9_hodge_and_torsion():
    assert max(hodge_residual(i, j) for i, j in hodge_pairs()) == 0.0
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        t = TorsionSample(rng.standard_normal((4, 6)))
        parts = torsion_decompose(t)
        worst = max(worst, np.max(np.abs(sum(p.Theta for p in parts) - t.Theta)))
        for k, part in enumerate(parts):
            for j, q in enumerate(torsion_decompose(part)):
                target = part.Theta if j == k else 0.0
                worst = max(worst, np.max(np.abs(q.Theta - target)))
    report("torsion decomposition", worst, 1e-12)
    assert worst < 1e-12


def test_criterion_10_determinism():
    cmd = [sys.executable, "-m", "spinor_forge", "verify", "--suite", "all", "--seed", "42", "--samples", "25"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["passed"]
