from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinor_forge.clifford import (
    ETA,
    IDENTITY,
    anticommutator,
    basis,
    basis_grades,
    from_coefficients,
    gamma,
    gamma0123,
    gamma5,
    gamma_ab,
    gamma_upper,
    gram_matrix,
    grade_project,
    product,
)

# Independent transcription of the chiral-basis matrices.
s1 = np.array([[0, 1], [1, 0]])
s2 = np.array([[0, -1j], [1j, 0]])
s3 = np.array([[1, 0], [0, -1]])
I2, O2 = np.eye(2), np.zeros((2, 2))
G_UP = [
    np.block([[O2, I2], [I2, O2]]),
    np.block([[O2, -s1], [s1, O2]]),
    np.block([[O2, -s2], [s2, O2]]),
    np.block([[O2, -s3], [s3, O2]]),
]


def test_upper_gammas_match_transcription():
    for mu in range(4):
        assert np.array_equal(gamma_upper(mu), G_UP[mu])
        assert np.array_equal(gamma(mu), ETA[mu, mu] * G_UP[mu])


@pytest.mark.parametrize("mu", [-1, 4, 7])
def test_gamma_index_out_of_range(mu):
    with pytest.raises(IndexError):
        gamma(mu)


def test_gamma_squares():
    assert np.array_equal(gamma(0) @ gamma(0), IDENTITY)
    assert np.array_equal(gamma(1) @ gamma(1), -IDENTITY)
    assert np.array_equal(gamma(0) @ gamma(1) + gamma(1) @ gamma(0), np.zeros((4, 4)))


def test_anticommutators_exact():
    for mu, nu in itertools.product(range(4), repeat=2):
        assert np.array_equal(anticommutator(gamma(mu), gamma(nu)), 2 * ETA[mu, nu] * IDENTITY)
        assert np.array_equal(anticommutator(gamma_upper(mu), gamma_upper(nu)), 2 * ETA[mu, nu] * IDENTITY)


def test_gamma5_block_form_and_product():
    g5 = gamma5()
    assert np.array_equal(g5, np.diag([1, 1, -1, -1]))
    assert np.array_equal(-1j * gamma(0) @ gamma(1) @ gamma(2) @ gamma(3), g5)
    assert np.array_equal(g5 @ g5, IDENTITY)


def test_gamma5_from_upper_indices_has_opposite_sign():
    # -i g^0 g^1 g^2 g^3 = -gamma5: the lower-index product is the one that
    # yields diag(1, 1, -1, -1).
    up = -1j * gamma_upper(0) @ gamma_upper(1) @ gamma_upper(2) @ gamma_upper(3)
    assert np.array_equal(up, -gamma5())


def test_gamma5_anticommutes_and_commutes():
    g5 = gamma5()
    for mu in range(4):
        assert np.array_equal(g5 @ gamma(mu) + gamma(mu) @ g5, np.zeros((4, 4)))
    for a, b in itertools.combinations(range(4), 2):
        gab = gamma_ab(a, b)
        assert np.array_equal(g5 @ gab, gab @ g5)


def test_volume_element():
    v = gamma0123()
    assert np.array_equal(v, 1j * gamma5())
    assert np.array_equal(v @ v, -IDENTITY)


def test_product_examples():
    x = np.arange(16).reshape(4, 4) * (1 + 2j)
    assert np.array_equal(product(IDENTITY, x), x)
    assert np.array_equal(product(gamma(2), gamma(3)), gamma_ab(2, 3))
    assert np.array_equal(product(gamma(0), gamma5()), -product(gamma5(), gamma(0)))


def test_basis_grades_and_independence():
    b = basis()
    assert len(b) == 16
    assert [len(idx) for idx, _ in b] == list(basis_grades())
    assert np.bincount(basis_grades()).tolist() == [1, 4, 6, 4, 1]
    g = gram_matrix()
    assert np.linalg.matrix_rank(g) == 16
    stack = np.stack([m.ravel() for _, m in b])
    assert np.linalg.matrix_rank(stack) == 16


def test_grade_project_examples():
    assert np.allclose(grade_project(IDENTITY, 0), IDENTITY, atol=1e-15)
    assert np.allclose(grade_project(gamma(1), 2), 0, atol=1e-15)
    a = gamma(0) @ gamma(1) + 3 * IDENTITY
    assert np.allclose(grade_project(a, 0), 3 * IDENTITY, atol=1e-14)
    assert np.allclose(grade_project(a, 2), gamma(0) @ gamma(1), atol=1e-14)


@pytest.mark.parametrize("k", [-1, 5])
def test_grade_out_of_range(k):
    with pytest.raises(ValueError):
        grade_project(IDENTITY, k)


def test_grade_projection_completeness(rng):
    for _ in range(100):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        total = sum(grade_project(a, k) for k in range(5))
        assert np.linalg.norm(total - a) <= 1e-12 * np.linalg.norm(a)


def test_grade_projection_idempotent(rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    for k in range(5):
        pk = grade_project(a, k)
        assert np.allclose(grade_project(pk, k), pk, atol=1e-13)
        for j in range(5):
            if j != k:
                assert np.allclose(grade_project(pk, j), 0, atol=1e-13)


@given(st.lists(st.floats(-5, 5), min_size=16, max_size=16))
def test_from_coefficients_roundtrip(c):
    a = from_coefficients(np.array(c))
    for k in range(5):
        mask = basis_grades() == k
        expect = from_coefficients(np.where(mask, c, 0.0))
        assert np.allclose(grade_project(a, k), expect, atol=1e-12)
