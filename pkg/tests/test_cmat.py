import numpy as np
import pytest
from hypothesis import given

from conftest import complex_matrices, finite, hermitian_matrices
from oracles import random_hermitian, series_expm
from qbrach import cmat
from qbrach.cmat import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z


def test_pauli_decompose_basis_and_identity():
    d = cmat.pauli_decompose(SIGMA_Z)
    assert (d.a0, d.ax, d.ay, d.az) == (0, 0, 0, 1)
    d = cmat.pauli_decompose(IDENTITY)
    assert (d.a0, d.ax, d.ay, d.az) == (1, 0, 0, 0)
    d = cmat.pauli_decompose(SIGMA_Y)
    assert (d.a0, d.ax, d.ay, d.az) == (0, 0, 1, 0)


def test_pauli_decompose_stark_hamiltonian():
    E, D, V, phi = 0.5, 1.0, 1.0, 0.7
    h = np.array([[E + D, V * np.exp(-1j * phi)], [V * np.exp(1j * phi), E - D]])
    d = cmat.pauli_decompose(h)
    np.testing.assert_allclose([d.a0, d.ax, d.ay, d.az],
                               [E, V * np.cos(phi), V * np.sin(phi), D], atol=1e-15)


@given(complex_matrices())
def test_pauli_roundtrip(m):
    np.testing.assert_allclose(cmat.pauli_decompose(m).compose(), m, rtol=0, atol=1e-14 * max(1, np.abs(m).max()))


@given(complex_matrices())
def test_pauli_coefficients_are_trace_projections(m):
    d = cmat.pauli_decompose(m)
    for coef, p in zip(d.vector, (SIGMA_X, SIGMA_Y, SIGMA_Z)):
        assert abs(coef - np.trace(p @ m) / 2) <= 1e-13 * max(1, np.abs(m).max())


def test_expm2_zero_is_identity():
    np.testing.assert_array_equal(cmat.expm2(np.zeros((2, 2))), IDENTITY)


def test_expm2_rotation_about_y():
    R, t = 1.3, 0.8
    expected = np.array([[np.cos(R * t), -np.sin(R * t)], [np.sin(R * t), np.cos(R * t)]])
    np.testing.assert_allclose(cmat.expm2(-1j * t * R * SIGMA_Y), expected, atol=1e-15)


def test_expm2_half_pi_x_against_series():
    u = cmat.expm2(-1j * np.pi / 2 * SIGMA_X)
    np.testing.assert_allclose(u, series_expm(-1j * np.pi / 2 * SIGMA_X), atol=1e-13)
    np.testing.assert_allclose(u, -1j * SIGMA_X, atol=1e-15)


def test_expm2_thousand_random_hermitian(rng):
    for _ in range(1000):
        m = random_hermitian(rng)
        u = cmat.expm2(-1j * m)
        assert cmat.unitarity_residual(u) <= 1e-12
        np.testing.assert_allclose(u, series_expm(-1j * m), rtol=0, atol=1e-12)


@pytest.mark.parametrize("r", [0.0, 1e-9, 3e-7, 1e-6, 2e-6, 1e-3])
def test_expm2_small_r_branch_is_continuous(r):
    m = 0.2 * IDENTITY + r * (0.6 * SIGMA_X + 0.8j * SIGMA_Z)
    np.testing.assert_allclose(cmat.expm2(m), series_expm(m), atol=1e-15)


@given(complex_matrices(scale=finite.map(lambda x: x / 4)))
def test_expm2_matches_series_for_general_complex(m):
    ref = series_expm(m)
    np.testing.assert_allclose(cmat.expm2(m), ref, rtol=1e-11, atol=1e-11 * max(1, np.abs(ref).max()))


@given(hermitian_matrices(), finite)
def test_expm2_semigroup(h, s):
    a = cmat.expm2(-1j * 0.1 * h)
    b = cmat.expm2(-1j * 0.1 * s / 10 * h)
    np.testing.assert_allclose(a @ b, cmat.expm2(-1j * 0.1 * (1 + s / 10) * h), atol=1e-11)


def test_expm2_rejects_non_finite():
    with pytest.raises(ValueError):
        cmat.expm2(np.array([[np.nan, 0], [0, 0]]))
    with pytest.raises(ValueError):
        cmat.expm2(np.eye(3))


def test_eig_sigma_z():
    w, lam = cmat.eig_hermitian2(SIGMA_Z)
    np.testing.assert_allclose(lam, [1, -1])
    np.testing.assert_allclose(np.abs(w), IDENTITY, atol=1e-15)


def test_eig_degenerate_returns_canonical_basis():
    w, lam = cmat.eig_hermitian2(IDENTITY)
    np.testing.assert_allclose(lam, [1, 1])
    np.testing.assert_array_equal(w, IDENTITY)


def test_eig_stark_eigenvalues():
    E, D, V = 2.0, 3.0, 4.0
    _, lam = cmat.eig_hermitian2(np.array([[E + D, V], [V, E - D]]))
    np.testing.assert_allclose(lam, [7.0, -3.0], atol=1e-14)


def test_eig_rejects_non_hermitian_with_residual():
    with pytest.raises(cmat.NonHermitianError) as err:
        cmat.eig_hermitian2(np.array([[0, 1], [0, 0]]))
    assert err.value.residual == pytest.approx(1.0)


@given(hermitian_matrices())
def test_eig_reconstruction_and_orthonormality(m):
    w, lam = cmat.eig_hermitian2(m)
    scale = max(1.0, np.abs(m).max())
    assert lam[0] >= lam[1]
    np.testing.assert_allclose(w.conj().T @ w, IDENTITY, atol=1e-12)
    np.testing.assert_allclose(w @ np.diag(lam) @ w.conj().T, m, atol=1e-12 * scale)
    for k in range(2):
        assert np.abs(m @ w[:, k] - lam[k] * w[:, k]).max() <= 1e-12 * scale


@given(hermitian_matrices())
def test_eig_matches_numpy_eigh(m):
    _, lam = cmat.eig_hermitian2(m)
    np.testing.assert_allclose(lam, np.linalg.eigvalsh(m)[::-1], atol=1e-12 * max(1, np.abs(m).max()))


@given(hermitian_matrices())
def test_eig_phase_convention(m):
    w, _ = cmat.eig_hermitian2(m)
    for k in range(2):
        first = next(z for z in w[:, k] if abs(z) > 1e-14)
        assert abs(first.imag) <= 1e-15 and first.real > 0


def test_commutator_pauli_algebra():
    np.testing.assert_array_equal(cmat.commutator(SIGMA_X, SIGMA_Y), 2j * SIGMA_Z)
    np.testing.assert_array_equal(cmat.commutator(SIGMA_X, SIGMA_X), np.zeros((2, 2)))


def test_commutator_with_optimal_hamiltonian():
    R, w, t = 1.5, 0.7, 0.4
    e = np.exp(2j * w * t)
    h = R * np.array([[0, e], [e.conjugate(), 0]])
    expected = w * R * np.array([[0, -2 * e], [2 * e.conjugate(), 0]])
    np.testing.assert_allclose(cmat.commutator(h, w * SIGMA_Z), expected, atol=1e-15)


@given(complex_matrices(), complex_matrices())
def test_commutator_antisymmetry(a, b):
    np.testing.assert_array_equal(cmat.commutator(a, b), -cmat.commutator(b, a))


def test_gate_fidelity_examples():
    u = cmat.expm2(-0.3j * SIGMA_X)
    assert cmat.gate_fidelity(u, u) == pytest.approx(1.0, abs=1e-15)
    assert cmat.gate_fidelity(np.diag([-1, 1]), SIGMA_Z) == pytest.approx(1.0)
    assert cmat.gate_fidelity(IDENTITY, SIGMA_X) == 0.0


def test_gate_fidelity_rejects_non_unitary():
    with pytest.raises(cmat.NonUnitaryError):
        cmat.gate_fidelity(2 * IDENTITY, IDENTITY)


@given(hermitian_matrices(), finite)
def test_gate_fidelity_ignores_global_phase(h, theta):
    u = cmat.expm2(-1j * h)
    v = np.exp(1j * theta) * u
    assert cmat.gate_fidelity(u, v) == pytest.approx(1.0, abs=1e-12)


def test_metric_residual_examples():
    np.testing.assert_allclose(cmat.metric_residual(cmat.expm2(-0.4j * SIGMA_Y), IDENTITY), 0, atol=1e-15)
    u = 0.9
    m = np.array([[np.cosh(u), 1j * np.sinh(u)], [-1j * np.sinh(u), np.cosh(u)]])
    np.testing.assert_allclose(cmat.metric_residual(m, SIGMA_Z), 0, atol=1e-15)
    np.testing.assert_array_equal(cmat.metric_residual(2 * IDENTITY, IDENTITY), 3 * IDENTITY)


def test_constants_are_read_only():
    with pytest.raises(ValueError):
        SIGMA_X[0, 0] = 5
