import math

import numpy as np
import scipy.linalg
from django.test import SimpleTestCase

from ..exceptions import DimensionMismatch, EmptyInput, NonConvergence, NotHermitian
from ..linalg import (
    hermitian_eig,
    max_norm,
    numerical_fidelity,
    orthonormalize,
    projector,
    psd_sqrt,
    svd,
)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


class OrthonormalizeTestCase(SimpleTestCase):

    def test_axis_aligned_pair(self):
        basis = orthonormalize([[1, 0], [1, 1]])
        self.assertEqual(len(basis), 2)
        self.assertAlmostEqual(abs(basis[0][0]), 1, places=12)
        self.assertAlmostEqual(abs(basis[1][1]), 1, places=12)
        self.assertAlmostEqual(abs(np.vdot(basis[0], basis[1])), 0, places=12)

    def test_orthonormal_input_is_kept(self):
        basis = orthonormalize([[1, 0, 0, 0]])
        np.testing.assert_allclose(basis[0], [1, 0, 0, 0], atol=1e-15)

    def test_rank_deficient_input_collapses(self):
        v = np.array([1, 2j, 3, 0])
        basis = orthonormalize([v, 2 * v])
        self.assertEqual(len(basis), 1)
        self.assertAlmostEqual(abs(np.vdot(basis[0], v)) / np.linalg.norm(v), 1, places=12)

    def test_empty_input(self):
        with self.assertRaises(EmptyInput):
            orthonormalize([])

    def test_mixed_dimensions(self):
        with self.assertRaises(DimensionMismatch):
            orthonormalize([[1, 0], [1, 0, 0]])

    def test_idempotent_span(self):
        rng = np.random.default_rng(7)
        vectors = [rng.standard_normal(5) + 1j * rng.standard_normal(5) for _ in range(3)]
        once = orthonormalize(vectors)
        twice = orthonormalize(once)
        self.assertLessEqual(max_norm(projector(once) - projector(twice)), 1e-10)

    def test_output_is_orthonormal(self):
        rng = np.random.default_rng(11)
        vectors = [rng.standard_normal(6) + 1j * rng.standard_normal(6) for _ in range(6)]
        basis = np.column_stack(orthonormalize(vectors))
        self.assertLessEqual(max_norm(basis.conj().T @ basis - np.eye(6)), 1e-10)


class HermitianEigTestCase(SimpleTestCase):

    def test_flip_operator(self):
        system = hermitian_eig([[0, 1], [1, 0]])
        np.testing.assert_allclose(system.eigenvalues, [1, -1], atol=1e-14)

    def test_identity(self):
        system = hermitian_eig(np.eye(5))
        np.testing.assert_allclose(system.eigenvalues, np.ones(5), atol=1e-14)

    def test_random_reconstruction(self):
        rng = np.random.default_rng(3)
        for n in (2, 4, 7):
            a = random_hermitian(rng, n)
            system = hermitian_eig(a)
            self.assertLessEqual(max_norm(system.reconstruct() - a), 1e-12 * max(1, max_norm(a)))
            vectors = system.eigenvectors
            self.assertLessEqual(max_norm(vectors.conj().T @ vectors - np.eye(n)), 1e-10)
            self.assertTrue(np.all(np.diff(system.eigenvalues) <= 0))

    def test_matches_numpy(self):
        rng = np.random.default_rng(5)
        a = random_hermitian(rng, 6)
        np.testing.assert_allclose(hermitian_eig(a).eigenvalues, np.linalg.eigvalsh(a)[::-1], atol=1e-10)

    def test_rayleigh_quotient_above_smallest_eigenvalue(self):
        rng = np.random.default_rng(9)
        a = random_hermitian(rng, 4)
        smallest = hermitian_eig(a).eigenvalues[-1]
        for _ in range(100):
            x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            x /= np.linalg.norm(x)
            self.assertGreaterEqual(np.real(np.vdot(x, a @ x)), smallest - 1e-9)

    def test_not_hermitian(self):
        with self.assertRaises(NotHermitian):
            hermitian_eig([[0, 1], [0, 0]])

    def test_not_square(self):
        with self.assertRaises(DimensionMismatch):
            hermitian_eig(np.zeros((2, 3)))

    def test_sweep_limit(self):
        with self.assertRaises(NonConvergence):
            hermitian_eig([[1, 0.5, 0.2], [0.5, 2, 0.3], [0.2, 0.3, 3]], max_sweeps=0)


class SvdTestCase(SimpleTestCase):

    def assertReconstructs(self, m):
        u, sigma, v = svd(m)
        self.assertLessEqual(max_norm(u @ np.diag(sigma) @ v.conj().T - m), 1e-10)
        self.assertLessEqual(max_norm(u.conj().T @ u - np.eye(u.shape[1])), 1e-10)
        self.assertLessEqual(max_norm(v.conj().T @ v - np.eye(v.shape[1])), 1e-10)
        self.assertTrue(np.all(sigma >= 0))
        self.assertTrue(np.all(np.diff(sigma) <= 0))
        return sigma

    def test_diagonal(self):
        sigma = self.assertReconstructs(np.diag([0.3, 0.9]))
        np.testing.assert_allclose(sigma, [0.9, 0.3], atol=1e-14)

    def test_scaled_identity(self):
        sigma = self.assertReconstructs(np.eye(2) / math.sqrt(2))
        np.testing.assert_allclose(sigma, [0.7071067811865476] * 2, atol=1e-15)

    def test_random_rectangular(self):
        rng = np.random.default_rng(1)
        self.assertReconstructs(rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2)))

    def test_rank_deficient(self):
        m = np.outer([1, 2, 3], [1j, 1])
        sigma = self.assertReconstructs(m)
        self.assertAlmostEqual(sigma[1], 0, places=7)

    def test_unitary_mixing_invariance(self):
        rng = np.random.default_rng(2)
        m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q1, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        q2, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        np.testing.assert_allclose(svd(m)[1], svd(q1 @ m @ q2)[1], atol=1e-10)


class FidelityTestCase(SimpleTestCase):

    def test_psd_sqrt_squares_back(self):
        rng = np.random.default_rng(4)
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        rho = a @ a.conj().T
        root = psd_sqrt(rho)
        self.assertLessEqual(max_norm(root @ root - rho), 1e-10 * max_norm(rho))

    def test_pure_states(self):
        psi = np.array([1, 0])
        phi = np.array([math.cos(0.3), math.sin(0.3)])
        fidelity = numerical_fidelity(np.outer(psi, psi), np.outer(phi, phi))
        self.assertAlmostEqual(fidelity, math.cos(0.3), places=7)

    def test_identical_states(self):
        rho = np.diag([0.25, 0.75])
        self.assertAlmostEqual(numerical_fidelity(rho, rho), 1, places=12)

    def test_psd_sqrt_matches_scipy(self):
        rng = np.random.default_rng(6)
        a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        rho = a @ a.conj().T
        self.assertLessEqual(max_norm(psd_sqrt(rho) - scipy.linalg.sqrtm(rho)), 1e-9)
