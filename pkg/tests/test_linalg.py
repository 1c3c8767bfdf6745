import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qhmetric.errors import DimensionError, PreconditionError
from qhmetric.linalg import (
    Tolerance,
    adjoint,
    as_matrix,
    eig_general,
    eig_hermitian,
    hermitian_part,
    is_hermitian,
    is_positive_definite,
)
from qhmetric.toy import ToyParameters, toy_hamiltonian, toy_metric

H60 = np.array([[-1, 0.5], [-0.5, 1]], dtype=complex)

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_square(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    re = draw(arrays(np.float64, (n, n), elements=finite))
    im = draw(arrays(np.float64, (n, n), elements=finite))
    return re + 1j * im


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(0.0, 0.0)
    with pytest.raises(ValueError):
        Tolerance(-1.0, 1e-10)
    with pytest.raises(ValueError):
        Tolerance(float("inf"), 1e-10)
    assert Tolerance().abs_eps == Tolerance().rel_eps == 1e-10


def test_as_matrix_rejects_bad_input():
    with pytest.raises(PreconditionError):
        as_matrix([[1.0, np.nan], [0, 1]])
    with pytest.raises(DimensionError):
        as_matrix([1.0, 2.0])
    with pytest.raises(DimensionError):
        as_matrix(np.ones((2, 3)), square=True)


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[1, 1j], [0, 2]], [[1, 0], [-1j, 2]]),
        (np.eye(3), np.eye(3)),
        (H60, [[-1, -0.5], [0.5, 1]]),
    ],
)
def test_adjoint_examples(m, expected):
    np.testing.assert_array_equal(adjoint(m), np.array(expected, dtype=complex))


@given(complex_square())
def test_adjoint_is_involution(m):
    np.testing.assert_array_equal(adjoint(adjoint(m)), m)


@given(complex_square())
def test_hermitian_part_is_hermitian(m):
    assert is_hermitian(hermitian_part(m))


def test_is_hermitian_examples():
    assert is_hermitian([[1, 1j], [-1j, 2]])
    assert not is_hermitian([[0, 1], [-1, 0]])
    assert is_hermitian(toy_metric(ToyParameters(math.pi / 3, 0.3)))
    with pytest.raises(DimensionError):
        is_hermitian(np.ones((2, 3)))


def test_eig_general_toy_against_characteristic_polynomial():
    w, v = eig_general(H60)
    # oracle: roots of λ² - tr λ + det
    roots = np.sort(np.roots([1, -np.trace(H60), np.linalg.det(H60)]).real)
    np.testing.assert_allclose(w.real, roots, atol=1e-12)
    np.testing.assert_allclose(w.real, [-math.sin(math.pi / 3), math.sin(math.pi / 3)], atol=1e-12)
    np.testing.assert_allclose(w.real, [-0.8660254, 0.8660254], atol=1e-7)
    np.testing.assert_allclose(np.linalg.norm(v, axis=0), 1.0)


def test_eig_general_diagonal():
    w, v = eig_general(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(w, [1, 2, 3])
    np.testing.assert_allclose(v, np.eye(3)[:, [1, 2, 0]], atol=1e-15)


def test_eig_general_defective_does_not_raise():
    w, v = eig_general([[0, 1], [0, 0]])
    np.testing.assert_allclose(w, [0, 0], atol=1e-15)
    # eigenvectors collapse onto the single true one
    assert abs(np.vdot(v[:, 0], v[:, 1])) > 1 - 1e-12


def test_eig_general_sorted_and_phase_fixed(rng):
    m = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    w, v = eig_general(m)
    keys = list(zip(w.real, w.imag))
    assert keys == sorted(keys)
    for k in range(6):
        idx = np.argmax(np.abs(v[:, k]))
        assert abs(v[idx, k].imag) < 1e-14 and v[idx, k].real > 0
    assert np.max(np.linalg.norm(m @ v - v * w, axis=0)) <= 1e-8 * np.linalg.norm(m)


def test_eig_hermitian_toy_metric():
    theta = toy_metric(ToyParameters(math.pi / 3, 0.3))
    w, v = eig_hermitian(theta)
    # oracle: quadratic formula for the 2x2 characteristic polynomial
    tr, det = 2.0, 1.3 * 0.7 - 0.25
    disc = math.sqrt(tr * tr / 4 - det)
    np.testing.assert_allclose(w, [tr / 2 - disc, tr / 2 + disc], atol=1e-14)
    np.testing.assert_allclose(w, [0.4169048, 1.5830952], atol=1e-7)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(2), atol=1e-14)


def test_eig_hermitian_identity_cases():
    np.testing.assert_allclose(eig_hermitian(np.eye(2))[0], [1, 1])
    np.testing.assert_allclose(eig_hermitian(toy_metric(ToyParameters(math.pi / 2, 0.0)))[0], [1, 1])
    with pytest.raises(PreconditionError):
        eig_hermitian(H60)


@settings(max_examples=50)
@given(complex_square(max_n=8))
def test_eig_hermitian_trace_and_determinant(m):
    h = hermitian_part(m)
    w, v = eig_hermitian(h)
    scale = max(np.linalg.norm(h), 1e-300)
    assert abs(np.sum(w) - np.trace(h).real) <= 1e-10 * scale + 1e-12
    det = np.linalg.det(h).real
    assert abs(np.prod(w) - det) <= 1e-8 * max(abs(det), scale ** len(w) * 1e-6) + 1e-12
    assert np.linalg.norm(v @ np.diag(w) @ v.conj().T - h) <= 1e-10 * scale + 1e-12


def test_is_positive_definite_examples():
    assert is_positive_definite(toy_metric(ToyParameters(math.pi / 3, 0.3)))
    assert not is_positive_definite(toy_metric(ToyParameters(math.pi / 3, 1.1)))
    assert is_positive_definite(np.eye(4))
    with pytest.raises(PreconditionError):
        is_positive_definite(toy_hamiltonian(ToyParameters(math.pi / 3)))


def test_positive_definite_matches_quadratic_form(rng):
    for _ in range(20):
        n = rng.integers(2, 6)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = hermitian_part(a) + rng.uniform(-1, 4) * np.eye(n)
        x = rng.standard_normal((n, 1000)) + 1j * rng.standard_normal((n, 1000))
        x /= np.linalg.norm(x, axis=0)
        forms = np.real(np.einsum("ik,ij,jk->k", x.conj(), h, x))
        if is_positive_definite(h):
            assert np.all(forms > 0)
        else:
            # necessary condition only: an eigenvector direction must be non-positive
            w, v = eig_hermitian(h)
            assert np.real(v[:, 0].conj() @ h @ v[:, 0]) <= 1e-10
