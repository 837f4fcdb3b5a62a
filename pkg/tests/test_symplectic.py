import numpy as np
import pytest

from sympent import (
    DimensionError,
    InvalidStateError,
    is_symplectic,
    random_symplectic,
    symplectic_form,
    symplectic_spectrum,
    williamson,
)

from conftest import random_valid_covariance


def test_form_single_mode():
    np.testing.assert_array_equal(symplectic_form(1), [[0.0, 1.0], [-1.0, 0.0]])


def test_form_two_modes_block_structure():
    omega = symplectic_form(2)
    np.testing.assert_array_equal(omega[:2, 2:], np.eye(2))
    np.testing.assert_array_equal(omega[2:, :2], -np.eye(2))
    np.testing.assert_array_equal(omega[:2, :2], np.zeros((2, 2)))


def test_form_squares_to_minus_identity():
    omega = symplectic_form(3)
    np.testing.assert_allclose(omega @ omega, -np.eye(6), atol=0)
    np.testing.assert_array_equal(omega.T, -omega)
    np.testing.assert_allclose(omega.T, np.linalg.inv(omega), atol=1e-15)


def test_form_rejects_zero_modes():
    with pytest.raises(DimensionError):
        symplectic_form(0)


def test_is_symplectic_identity():
    assert is_symplectic(np.eye(6), tol=1e-12)


def test_is_symplectic_normal_mode_rotation():
    o = np.array([[1.0, -1.0], [1.0, 1.0]]) / np.sqrt(2.0)
    s = np.block([[o, np.zeros((2, 2))], [np.zeros((2, 2)), o]])
    assert is_symplectic(s, tol=1e-12)


def test_is_symplectic_rejects_uniform_scaling():
    assert not is_symplectic(2.0 * np.eye(4))


def test_is_symplectic_rejects_odd_dimension():
    with pytest.raises(DimensionError):
        is_symplectic(np.eye(3))


def test_spectrum_vacuum_is_all_half():
    np.testing.assert_allclose(symplectic_spectrum(0.5 * np.eye(6)), [0.5] * 3, atol=1e-14)


@pytest.mark.parametrize("m,omega,lam", [(1.0, 1.0, 2.0), (2.0, 0.7, 0.3), (0.5, 3.0, 5.0)])
def test_spectrum_of_reduced_oscillator_matches_closed_form(m, omega, lam):
    alpha = np.sqrt(1.0 + 4.0 * lam / (m * omega**2))
    gamma = np.diag([(1 + alpha) / (4 * m * alpha * omega), m * (1 + alpha) * omega / 4])
    sigma = (1 + alpha) / (4 * np.sqrt(alpha))
    np.testing.assert_allclose(symplectic_spectrum(gamma), [sigma], rtol=1e-13)


def test_spectrum_invariant_under_symplectic_congruence():
    gamma, sigmas = random_valid_covariance(3, seed=5)
    for k in range(100):
        s = random_symplectic(3, seed=1000 + k)
        moved = symplectic_spectrum(s @ gamma @ s.T)
        np.testing.assert_allclose(moved, sigmas, atol=1e-8)


def test_spectrum_rejects_asymmetric():
    bad = np.array([[1.0, 0.2], [0.0, 1.0]])
    with pytest.raises(InvalidStateError):
        symplectic_spectrum(bad)


def test_spectrum_rejects_indefinite():
    with pytest.raises(InvalidStateError):
        symplectic_spectrum(np.diag([1.0, -1.0]))


def test_gamma_omega_eigenvalues_are_imaginary_pairs():
    gamma, sigmas = random_valid_covariance(4, seed=11)
    eigs = np.linalg.eigvals(gamma @ symplectic_form(4))
    assert np.max(np.abs(eigs.real)) < 1e-10
    found = np.sort(np.abs(eigs.imag))[::-1]
    np.testing.assert_allclose(found[::2], sigmas, atol=1e-10)


def test_williamson_vacuum():
    dec = williamson(0.5 * np.eye(4))
    np.testing.assert_allclose(dec.spectrum, [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(dec.normal_form, 0.5 * np.eye(4), atol=1e-12)
    assert is_symplectic(dec.transform, tol=1e-10)


def test_williamson_single_mode_closed_form():
    a, b = 0.7, 2.3
    dec = williamson(np.diag([a, b]))
    np.testing.assert_allclose(dec.spectrum, [np.sqrt(a * b)], rtol=1e-14)
    expected = np.diag([(b / a) ** 0.25, (a / b) ** 0.25])
    np.testing.assert_allclose(dec.transform, expected, atol=1e-12)


def test_williamson_random_states_residuals():
    for seed in range(8):
        gamma, sigmas = random_valid_covariance(4, seed=100 + seed)
        omega = symplectic_form(4)
        dec = williamson(gamma)
        np.testing.assert_allclose(dec.spectrum, sigmas, atol=1e-9)
        res_g = np.max(np.abs(dec.transform @ gamma @ dec.transform.T - dec.normal_form))
        res_o = np.max(np.abs(dec.transform @ omega @ dec.transform.T - omega))
        assert res_g < 1e-8
        assert res_o < 1e-8


def test_williamson_handles_degenerate_spectra():
    s = random_symplectic(3, seed=55, scale=0.7)
    gamma = s @ np.diag([0.9] * 6) @ s.T
    omega = symplectic_form(3)
    dec = williamson(gamma)
    np.testing.assert_allclose(dec.spectrum, [0.9] * 3, atol=1e-12)
    assert np.max(np.abs(dec.transform @ gamma @ dec.transform.T - dec.normal_form)) < 1e-10
    assert np.max(np.abs(dec.transform @ omega @ dec.transform.T - omega)) < 1e-10


def test_williamson_deterministic_for_identical_input():
    gamma, _ = random_valid_covariance(3, seed=33)
    first = williamson(gamma)
    second = williamson(gamma)
    np.testing.assert_array_equal(first.transform, second.transform)
    np.testing.assert_array_equal(first.spectrum, second.spectrum)


def test_williamson_spectrum_idempotent_on_normal_form():
    gamma, _ = random_valid_covariance(3, seed=21)
    dec = williamson(gamma)
    np.testing.assert_allclose(symplectic_spectrum(dec.normal_form), dec.spectrum, atol=1e-12)


def test_williamson_rejects_indefinite():
    with pytest.raises(InvalidStateError):
        williamson(np.diag([1.0, 1.0, -0.5, 1.0]))


def test_random_symplectic_membership():
    for n in (1, 2, 4):
        for seed in (0, 7, 123):
            assert is_symplectic(random_symplectic(n, seed), tol=1e-10)


def test_random_symplectic_deterministic_for_seed():
    first = random_symplectic(2, seed=7)
    second = random_symplectic(2, seed=7)
    np.testing.assert_array_equal(first, second)
    assert not np.array_equal(first, random_symplectic(2, seed=8))


def test_random_symplectic_unit_determinant():
    for seed in range(10):
        s = random_symplectic(3, seed=seed)
        assert abs(np.linalg.det(s) - 1.0) < 1e-10
