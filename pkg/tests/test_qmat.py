import math

import numpy as np
import pytest

from conftest import random_density, random_hermitian, random_unitary
from wree.qmat import (
    DensityMatrix,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDensityMatrix,
    NotHermitian,
    WrongDimension,
    hermitian_eigensystem,
    is_ppt,
    partial_trace,
    partial_transpose,
    relative_entropy,
    von_neumann_entropy,
)

BELL_PSI_PLUS = np.array([0.0, 1.0, 1.0, 0.0]) / math.sqrt(2.0)


def x_matrix(a, b, c):
    s = math.sqrt(b * c)
    return np.array(
        [[a, 0, 0, 0], [0, b, s, 0], [0, s, c, 0], [0, 0, 0, 0]], dtype=complex
    )


class TestEigensystem:
    def test_identity(self):
        es = hermitian_eigensystem(np.eye(4, dtype=complex))
        assert np.allclose(es.eigenvalues, np.ones(4), atol=1e-14)

    def test_already_diagonal(self):
        es = hermitian_eigensystem(np.diag([0.0, 0.5, 0.5, 0.0]).astype(complex))
        assert np.allclose(es.eigenvalues, [0.0, 0.0, 0.5, 0.5], atol=1e-14)

    def test_rank2_x_matrix(self):
        # middle block {{b, sqrt(bc)}, {sqrt(bc), c}} has determinant 0 and
        # trace b + c, so the spectrum is {0, 0, a, b + c}
        es = hermitian_eigensystem(x_matrix(1 / 3, 1 / 3, 1 / 3))
        assert np.allclose(es.eigenvalues, [0.0, 0.0, 1 / 3, 2 / 3], atol=1e-12)

    def test_not_hermitian_raises(self):
        m = np.eye(4, dtype=complex)
        m[0, 1] = 1e-6
        with pytest.raises(NotHermitian):
            hermitian_eigensystem(m)

    def test_deterministic(self):
        rng = np.random.default_rng(11)
        m = random_hermitian(rng, 8)
        first = hermitian_eigensystem(m)
        second = hermitian_eigensystem(m.copy())
        assert np.array_equal(first.eigenvalues, second.eigenvalues)
        assert np.array_equal(first.eigenvectors, second.eigenvectors)

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(1729)
        worst_rec = 0.0
        worst_orth = 0.0
        for trial in range(10_000):
            dim = (2, 4, 8)[trial % 3]
            m = random_hermitian(rng, dim)
            es = hermitian_eigensystem(m)
            worst_rec = max(worst_rec, float(np.abs(es.reconstruct() - m).max()))
            v = es.eigenvectors
            worst_orth = max(
                worst_orth, float(np.abs(v.conj().T @ v - np.eye(dim)).max())
            )
        assert worst_rec <= 1e-10
        assert worst_orth <= 1e-10


class TestPartialTrace:
    def test_product_basis_state(self):
        rho = DensityMatrix.from_state_vector([1, 0, 0, 0])
        reduced = partial_trace(rho, 1)
        assert np.allclose(reduced.matrix, [[1, 0], [0, 0]], atol=0.0)

    def test_w_state_trace_over_c(self):
        amp = 1 / math.sqrt(3)
        psi = np.zeros(8)
        psi[1] = psi[2] = psi[4] = amp
        rho = DensityMatrix.from_state_vector(psi)
        expected = np.array(
            [
                [1 / 3, 0, 0, 0],
                [0, 1 / 3, 1 / 3, 0],
                [0, 1 / 3, 1 / 3, 0],
                [0, 0, 0, 0],
            ]
        )
        assert np.allclose(partial_trace(rho, 2).matrix, expected, atol=1e-14)

    def test_w_state_trace_over_b(self):
        amp = 1 / math.sqrt(3)
        psi = np.zeros(8)
        psi[1] = psi[2] = psi[4] = amp
        rho = DensityMatrix.from_state_vector(psi)
        expected = np.zeros((4, 4))
        for i, j in ((0, 0), (1, 1), (2, 2), (1, 2), (2, 1)):
            expected[i, j] = 1 / 3
        assert np.allclose(partial_trace(rho, 1).matrix, expected, atol=1e-14)

    def test_product_factor_recovery(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            rho_a = random_density(rng, 2)
            rho_b = random_density(rng, 2)
            joint = DensityMatrix(np.kron(rho_a, rho_b))
            assert np.abs(partial_trace(joint, 1).matrix - rho_a).max() <= 1e-14
            assert np.abs(partial_trace(joint, 0).matrix - rho_b).max() <= 1e-14

    def test_trace_and_positivity_preserved(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            rho = DensityMatrix(random_density(rng, 8))
            for qubit in range(3):
                # DensityMatrix construction re-checks trace, Hermiticity, PSD
                reduced = partial_trace(rho, qubit)
                assert abs(np.trace(reduced.matrix).real - 1.0) <= 1e-12
                assert np.linalg.eigvalsh(reduced.matrix).min() >= -1e-10

    def test_errors(self):
        rho = DensityMatrix.from_state_vector([1, 0, 0, 0])
        with pytest.raises(IndexOutOfRange):
            partial_trace(rho, 2)
        single = DensityMatrix(np.diag([1.0, 0.0]).astype(complex))
        with pytest.raises(WrongDimension):
            partial_trace(single, 0)


class TestPartialTranspose:
    def test_product_state_stays_psd(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            joint = DensityMatrix(np.kron(random_density(rng, 2), random_density(rng, 2)))
            for sub in ("A", "B"):
                assert np.linalg.eigvalsh(partial_transpose(joint, sub)).min() >= -1e-12

    def test_boundary_candidate_has_zero_eigenvalue(self):
        # (x, u, v, y, r) = (1/4, 1/4, 1/4, 1/4, 1/4) satisfies r^2 = xy, so
        # the smaller corner eigenvalue (x + y - sqrt((x-y)^2 + 4r^2))/2 is 0
        m = np.array(
            [
                [0.25, 0, 0, 0],
                [0, 0.25, 0.25, 0],
                [0, 0.25, 0.25, 0],
                [0, 0, 0, 0.25],
            ],
            dtype=complex,
        )
        pt = partial_transpose(DensityMatrix(m), "A")
        assert np.abs(np.linalg.eigvalsh(pt)).min() <= 1e-15

    def test_bell_state(self):
        rho = DensityMatrix.from_state_vector(BELL_PSI_PLUS)
        pt = partial_transpose(rho, "A")
        # transposing subsystem A moves the coherences onto the corners
        expected = 0.5 * np.array(
            [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]], dtype=complex
        )
        assert np.allclose(pt, expected, atol=1e-15)
        assert abs(np.linalg.eigvalsh(pt).min() + 0.5) <= 1e-12

    def test_involution_bit_for_bit(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            rho = DensityMatrix(random_density(rng, 4))
            for sub in ("A", "B"):
                twice = partial_transpose(partial_transpose(rho, sub), sub)
                assert np.array_equal(twice, rho.matrix)

    def test_trace_preserved(self):
        rng = np.random.default_rng(19)
        rho = DensityMatrix(random_density(rng, 4))
        assert abs(np.trace(partial_transpose(rho, "A")) - 1.0) <= 1e-14

    def test_wrong_dimension(self):
        rho = DensityMatrix(np.eye(8, dtype=complex) / 8)
        with pytest.raises(WrongDimension):
            partial_transpose(rho, "A")


class TestIsPpt:
    def test_product_state(self):
        assert is_ppt(DensityMatrix.from_state_vector([1, 0, 0, 0]))

    def test_bell_state(self):
        assert not is_ppt(DensityMatrix.from_state_vector(BELL_PSI_PLUS), tol=1e-9)

    def test_boundary_candidate(self):
        m = np.array(
            [
                [0.25, 0, 0, 0],
                [0, 0.25, 0.25, 0],
                [0, 0.25, 0.25, 0],
                [0, 0, 0, 0.25],
            ],
            dtype=complex,
        )
        assert is_ppt(DensityMatrix(m), tol=1e-12)

    def test_negative_tol_rejected(self):
        with pytest.raises(ValueError):
            is_ppt(DensityMatrix.from_state_vector([1, 0, 0, 0]), tol=-1.0)


class TestVonNeumannEntropy:
    def test_pure_state(self):
        assert von_neumann_entropy(DensityMatrix.from_state_vector(BELL_PSI_PLUS)) == 0.0

    def test_maximally_mixed_qubit(self):
        s = von_neumann_entropy(DensityMatrix.maximally_mixed(1))
        assert abs(s - math.log(2.0)) <= 1e-14

    def test_binary_spectrum(self):
        expected = (1 / 3) * math.log(3.0) + (2 / 3) * math.log(1.5)
        s = von_neumann_entropy(DensityMatrix(np.diag([1 / 3, 2 / 3]).astype(complex)))
        assert abs(s - expected) <= 1e-14

    def test_range_and_unitary_invariance(self):
        rng = np.random.default_rng(23)
        for _ in range(200):
            rho = random_density(rng, 4)
            s = von_neumann_entropy(DensityMatrix(rho))
            assert 0.0 <= s <= math.log(4.0) + 1e-12
            u = random_unitary(rng, 4)
            rotated = von_neumann_entropy(DensityMatrix(u @ rho @ u.conj().T))
            assert abs(rotated - s) <= 1e-9


class TestRelativeEntropy:
    def test_self_is_zero(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            rho = DensityMatrix(random_density(rng, 4))
            assert abs(relative_entropy(rho, rho)) <= 1e-12

    def test_disjoint_supports(self):
        zero = DensityMatrix(np.diag([1.0, 0.0]).astype(complex))
        one = DensityMatrix(np.diag([0.0, 1.0]).astype(complex))
        assert relative_entropy(zero, one) == math.inf

    def test_bell_vs_dephased(self):
        # S(rho) = 0 and -tr(rho ln sigma) = -ln(1/2) for the dephased mix
        rho = DensityMatrix.from_state_vector(BELL_PSI_PLUS)
        sigma = DensityMatrix(np.diag([0.0, 0.5, 0.5, 0.0]).astype(complex))
        assert abs(relative_entropy(rho, sigma) - math.log(2.0)) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            relative_entropy(
                DensityMatrix.maximally_mixed(1), DensityMatrix.maximally_mixed(2)
            )

    def test_nonnegative_zero_only_at_equality(self):
        rng = np.random.default_rng(31)
        for trial in range(10_000):
            dim = (2, 4)[trial % 2]
            rho = DensityMatrix(random_density(rng, dim))
            sigma = DensityMatrix(random_density(rng, dim))
            value = relative_entropy(rho, sigma)
            assert value >= 0.0
            assert value > 1e-12  # distinct full-rank states stay separated

    def test_rank_deficient_target_with_support_inclusion(self):
        rho = DensityMatrix(np.diag([0.0, 0.5, 0.5, 0.0]).astype(complex))
        sigma = DensityMatrix(np.diag([0.25, 0.25, 0.25, 0.25]).astype(complex))
        expected = -math.log(2.0) + math.log(4.0)  # ln 2
        assert abs(relative_entropy(rho, sigma) - expected) <= 1e-12


class TestDensityMatrixValidation:
    def test_rejects_non_hermitian(self):
        m = np.eye(2, dtype=complex)
        m[0, 1] = 1e-3
        with pytest.raises(InvalidDensityMatrix):
            DensityMatrix(m)

    def test_rejects_bad_trace(self):
        with pytest.raises(InvalidDensityMatrix):
            DensityMatrix(np.eye(2, dtype=complex))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidDensityMatrix):
            DensityMatrix(np.diag([1.5, -0.5]).astype(complex))

    def test_rejects_unsupported_dimension(self):
        with pytest.raises(WrongDimension):
            DensityMatrix(np.eye(3, dtype=complex) / 3)

    def test_matrix_is_frozen(self):
        rho = DensityMatrix.maximally_mixed(1)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 0.7
