"""
Dense complex linear algebra for small matrices.

Everything works on numpy arrays (complex128). Vectors are 1-d arrays,
bases are returned as lists of vectors and operators as 2-d arrays.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .constants import (
    HERMITIAN_TOLERANCE,
    JACOBI_MAX_SWEEPS,
    JACOBI_TOLERANCE,
    ORTHONORMALIZE_TOLERANCE,
    PSD_CLIP,
)
from .exceptions import (
    DimensionMismatch,
    EmptyInput,
    InvalidParameters,
    NonConvergence,
    NotHermitian,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenSystem:
    eigenvalues: np.ndarray
    # Eigenvectors are the columns
    eigenvectors: np.ndarray

    @property
    def vectors(self):
        return [self.eigenvectors[:, i] for i in range(self.eigenvectors.shape[1])]

    def reconstruct(self):
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T


def as_vector(vector):
    vector = np.asarray(vector, dtype=complex)
    if vector.ndim != 1 or vector.size == 0:
        raise DimensionMismatch(f'Expected a non-empty vector, got shape {vector.shape}')
    if not np.all(np.isfinite(vector)):
        raise InvalidParameters('Vector entries must be finite')
    return vector


def as_matrix(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.size == 0:
        raise DimensionMismatch(f'Expected a non-empty matrix, got shape {matrix.shape}')
    if not np.all(np.isfinite(matrix)):
        raise InvalidParameters('Matrix entries must be finite')
    return matrix


def max_norm(matrix):
    return float(np.max(np.abs(matrix))) if np.size(matrix) else 0.0


def as_columns(vectors):
    return np.column_stack(vectors)


def projector(vectors):
    """Orthogonal projector onto the span of an orthonormal list of vectors."""
    basis = as_columns(vectors)
    return basis @ basis.conj().T


def orthonormalize(vectors, tol=ORTHONORMALIZE_TOLERANCE):
    """
    Modified Gram-Schmidt with one reorthogonalization pass.

    A vector whose residual falls below tol times the largest input norm
    is treated as linearly dependent and dropped, so the length of the
    result is the numerical rank of the input.
    """
    if not len(vectors):
        raise EmptyInput('Cannot orthonormalize an empty set of vectors')
    if tol <= 0:
        raise InvalidParameters(f'Tolerance must be positive, got {tol}')

    columns = [as_vector(v) for v in vectors]
    if len({v.shape[0] for v in columns}) > 1:
        raise DimensionMismatch('All vectors must have the same dimension')

    scale = max(np.linalg.norm(v) for v in columns)
    basis = []
    if scale == 0:
        return basis

    for vector in columns:
        residual = vector.copy()
        for _ in range(2):
            for b in basis:
                residual = residual - b * np.vdot(b, residual)
        norm = np.linalg.norm(residual)
        if norm > tol * scale:
            basis.append(residual / norm)

    return basis


def _rotation(app, aqq, apq):
    """
    Unitary 2x2 rotation G with G^H [[app, apq], [conj(apq), aqq]] G diagonal.

    The phase of apq is moved onto the first axis, which leaves a real
    symmetric block for the classic Jacobi angle.
    """
    magnitude = abs(apq)
    phase = apq / magnitude
    theta = 0.5 * math.atan2(2 * magnitude, app - aqq)
    c, s = math.cos(theta), math.sin(theta)
    return phase * c, -phase * s, s, c


def _rotate(p, q, A, V, g):
    g00, g01, g10, g11 = g

    col_p, col_q = A[:, p].copy(), A[:, q].copy()
    A[:, p] = col_p * g00 + col_q * g10
    A[:, q] = col_p * g01 + col_q * g11

    row_p, row_q = A[p, :].copy(), A[q, :].copy()
    A[p, :] = np.conj(g00) * row_p + np.conj(g10) * row_q
    A[q, :] = np.conj(g01) * row_p + np.conj(g11) * row_q

    # Zero by construction
    A[p, q] = A[q, p] = 0
    A[p, p], A[q, q] = A[p, p].real, A[q, q].real

    vec_p, vec_q = V[:, p].copy(), V[:, q].copy()
    V[:, p] = vec_p * g00 + vec_q * g10
    V[:, q] = vec_p * g01 + vec_q * g11


def hermitian_eig(A, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations, eigenvalues descending."""
    A = as_matrix(A)
    n, m = A.shape
    if n != m:
        raise DimensionMismatch(f'Matrix must be square, got {n}x{m}')

    scale = max_norm(A)
    if max_norm(A - A.conj().T) > HERMITIAN_TOLERANCE * scale:
        raise NotHermitian('Matrix is not Hermitian')

    A = (A + A.conj().T) / 2
    V = np.eye(n, dtype=complex)
    threshold = JACOBI_TOLERANCE * np.linalg.norm(A)

    for sweep in range(max_sweeps + 1):
        rotated = False
        for p in range(n):
            for q in range(p + 1, n):
                if abs(A[p, q]) > threshold:
                    _rotate(p, q, A, V, _rotation(A[p, p].real, A[q, q].real, A[p, q]))
                    rotated = True
        if not rotated:
            break
    else:
        raise NonConvergence(f'Jacobi iteration did not converge in {max_sweeps} sweeps')

    logger.debug(f'Jacobi converged after {sweep} sweeps on a {n}x{n} matrix')

    eigenvalues = np.real(np.diag(A))
    order = np.argsort(-eigenvalues, kind='stable')
    return EigenSystem(eigenvalues=eigenvalues[order], eigenvectors=V[:, order])


def _complete(columns, dimension):
    """A unit vector orthogonal to every column, picked from the standard basis."""
    best, best_norm = None, -1.0
    for i in range(dimension):
        candidate = np.zeros(dimension, dtype=complex)
        candidate[i] = 1
        for _ in range(2):
            for c in columns:
                candidate = candidate - c * np.vdot(c, candidate)
        norm = np.linalg.norm(candidate)
        if norm > best_norm:
            best, best_norm = candidate, norm
    return best / best_norm


def svd(M, tol=ORTHONORMALIZE_TOLERANCE):
    """
    Thin singular value decomposition M = U diag(sigma) V^H.

    V comes from the eigenvectors of M^H M, U from back-substituting
    M V column by column. Columns whose image is numerically zero are
    completed to an orthonormal set. Every sigma is made real and
    nonnegative by absorbing its phase into the matching U column.
    """
    M = as_matrix(M)
    m, n = M.shape
    rank = min(m, n)

    system = hermitian_eig(M.conj().T @ M)
    V = system.eigenvectors[:, :rank]
    images = M @ V
    scale = math.sqrt(max(system.eigenvalues[0], 0.0))

    columns = []
    sigma = np.zeros(rank)
    for j in range(rank):
        residual = images[:, j].copy()
        for _ in range(2):
            for c in columns:
                residual = residual - c * np.vdot(c, residual)
        norm = np.linalg.norm(residual)
        if norm > tol * scale and norm > 0:
            column = residual / norm
        else:
            column = _complete(columns, m)
        overlap = np.vdot(column, images[:, j])
        if abs(overlap) > 0:
            column = column * (overlap / abs(overlap))
        columns.append(column)
        sigma[j] = abs(overlap)

    order = np.argsort(-sigma, kind='stable')
    U = as_columns(columns)[:, order]
    return U, sigma[order], V[:, order]


def psd_sqrt(A):
    """Principal square root of a Hermitian positive semidefinite matrix."""
    system = hermitian_eig(A)
    values = np.clip(system.eigenvalues, 0, None)
    if values.size and values[0] > 0:
        values[values < PSD_CLIP * values[0]] = 0
    vectors = system.eigenvectors
    return (vectors * np.sqrt(values)) @ vectors.conj().T


def numerical_fidelity(rho1, rho2):
    """Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) from explicit density matrices."""
    root = psd_sqrt(rho1)
    inner = root @ as_matrix(rho2) @ root
    values = np.clip(hermitian_eig((inner + inner.conj().T) / 2).eigenvalues, 0, None)
    if values.size and values[0] > 0:
        values[values < PSD_CLIP * values[0]] = 0
    return float(np.sum(np.sqrt(values)))
