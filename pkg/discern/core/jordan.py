"""
Jordan (principal angle) decomposition of two subspaces.

For two k-dimensional subspaces S1, S2 of a 2k-dimensional space in
general position, the Jordan bases |psi_i> of S1 and |psi_{k+i}> of S2
satisfy <psi_i|psi_{k+j}> = delta_ij cos(theta_i). Each pair spans a
two-dimensional sector T_i; the sectors are mutually orthogonal and the
unit vectors z_i (in T_i, orthogonal to psi_{k+i}) and y_i (in T_i,
orthogonal to psi_i) span the orthogonal complements of S2 and S1.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .constants import (
    GENERAL_POSITION_TOLERANCE,
    ORTHONORMALIZE_TOLERANCE,
    SECTOR_SIN_TOLERANCE,
)
from .exceptions import (
    DegenerateSector,
    DimensionMismatch,
    InvalidParameters,
    NotGeneralPosition,
    ZeroSubspace,
)
from .linalg import (
    as_columns,
    as_vector,
    orthonormalize,
    projector,
    svd,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Subspace:
    ambient_dim: int
    spanning_vectors: tuple
    orthonormal_basis: tuple
    projector: np.ndarray

    @property
    def dim(self):
        return len(self.orthonormal_basis)

    @property
    def complement_projector(self):
        return np.eye(self.ambient_dim) - self.projector


@dataclass(frozen=True, eq=False)
class JordanDecomposition:
    k: int
    basis1: tuple
    basis2: tuple
    cos_angles: np.ndarray
    z_frame: tuple
    y_frame: tuple

    @property
    def ambient_dim(self):
        return 2 * self.k

    @property
    def sin_angles(self):
        return np.sqrt(np.clip(1 - self.cos_angles ** 2, 0, None))

    @property
    def projector1(self):
        return projector(self.basis1)

    @property
    def projector2(self):
        return projector(self.basis2)

    def sector_basis(self, i):
        return self.basis1[i], self.basis2[i]

    def swapped(self):
        """The same decomposition with the roles of S1 and S2 exchanged."""
        return JordanDecomposition(
            k=self.k,
            basis1=self.basis2,
            basis2=self.basis1,
            cos_angles=self.cos_angles,
            z_frame=self.y_frame,
            y_frame=self.z_frame,
        )


def make_subspace(ambient_dim, spanning_vectors, tol=ORTHONORMALIZE_TOLERANCE):
    if int(ambient_dim) != ambient_dim or ambient_dim < 1:
        raise InvalidParameters(f'Ambient dimension must be a positive integer, got {ambient_dim}')
    if not len(spanning_vectors):
        raise ZeroSubspace('A subspace needs at least one spanning vector')

    vectors = tuple(as_vector(v) for v in spanning_vectors)
    for vector in vectors:
        if vector.shape[0] != ambient_dim:
            raise DimensionMismatch(
                f'Spanning vector of length {vector.shape[0]} in a space of dimension {ambient_dim}'
            )

    basis = tuple(orthonormalize(vectors, tol=tol))
    if not basis:
        raise ZeroSubspace('Spanning vectors are all numerically zero')

    return Subspace(
        ambient_dim=int(ambient_dim),
        spanning_vectors=vectors,
        orthonormal_basis=basis,
        projector=projector(basis),
    )


def _frames(basis1, basis2, cos_angles):
    z_frame, y_frame = [], []
    for psi1, psi2, c in zip(basis1, basis2, cos_angles):
        s = math.sqrt(max(1 - c * c, 0.0))
        if s < SECTOR_SIN_TOLERANCE:
            raise DegenerateSector(f'Sector with cos(theta) = {c} has no complement direction')
        z = (psi1 - c * psi2) / s
        y = (psi2 - c * psi1) / s
        z_frame.append(z / np.linalg.norm(z))
        y_frame.append(y / np.linalg.norm(y))
    return tuple(z_frame), tuple(y_frame)


def complement_frames(jd):
    """Return (z_frame, y_frame): orthonormal bases of the complements of S2 and S1."""
    return _frames(jd.basis1, jd.basis2, jd.cos_angles)


def jordan_decompose(s1, s2, tolerance=GENERAL_POSITION_TOLERANCE):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(
            f'Subspaces live in spaces of dimension {s1.ambient_dim} and {s2.ambient_dim}'
        )
    k = s1.dim
    if s2.dim != k or s1.ambient_dim != 2 * k:
        raise DimensionMismatch(
            f'Expected two subspaces of equal dimension k in dimension 2k, got '
            f'{s1.dim} and {s2.dim} in {s1.ambient_dim}'
        )

    E = as_columns(s1.orthonormal_basis)
    F = as_columns(s2.orthonormal_basis)
    U, sigma, V = svd(E.conj().T @ F)
    cos_angles = np.clip(sigma, 0.0, 1.0)

    if cos_angles[0] > 1 - tolerance:
        raise NotGeneralPosition(
            f'Subspaces share a direction (cos theta = {cos_angles[0]!r}), they are not in general position'
        )
    if len(orthonormalize(s1.orthonormal_basis + s2.orthonormal_basis)) != 2 * k:
        raise NotGeneralPosition('S1 and S2 do not span the ambient space')

    rotated1, rotated2 = E @ U, F @ V
    basis1 = tuple(rotated1[:, i] for i in range(k))
    basis2 = tuple(rotated2[:, i] for i in range(k))
    z_frame, y_frame = _frames(basis1, basis2, cos_angles)

    logger.debug(f'Jordan cosines: {cos_angles.tolist()}')

    return JordanDecomposition(
        k=k,
        basis1=basis1,
        basis2=basis2,
        cos_angles=cos_angles,
        z_frame=z_frame,
        y_frame=y_frame,
    )


def random_unitary(dimension, rng):
    """Haar-random unitary from orthonormalized complex Gaussian columns."""
    gaussian = rng.standard_normal((dimension, dimension)) + 1j * rng.standard_normal((dimension, dimension))
    return as_columns(orthonormalize([gaussian[:, i] for i in range(dimension)]))


def random_embedding(cos_angles, seed):
    """
    An explicit subspace pair of C^2k with the given Jordan cosines.

    The Jordan bases sit in a Haar-random frame and the spanning vectors
    handed to make_subspace are random invertible mixtures of them, so
    the decomposition has real work to do.
    """
    cos_angles = np.asarray(cos_angles, dtype=float)
    k = cos_angles.shape[0]
    rng = np.random.Generator(np.random.Philox(seed))
    frame = random_unitary(2 * k, rng)

    sin_angles = np.sqrt(np.clip(1 - cos_angles ** 2, 0, None))
    basis1 = frame[:, :k]
    basis2 = frame[:, :k] * cos_angles + frame[:, k:] * sin_angles

    spans = []
    for basis in (basis1, basis2):
        mixing = random_unitary(k, rng) @ np.diag(1 + rng.random(k))
        mixed = basis @ mixing
        spans.append([mixed[:, i] for i in range(k)])

    return make_subspace(2 * k, spans[0]), make_subspace(2 * k, spans[1])
