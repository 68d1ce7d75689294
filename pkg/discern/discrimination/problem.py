import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from discern.core.constants import (
    GENERAL_POSITION_TOLERANCE,
    WEIGHT_SUM_TOLERANCE,
)
from discern.core.exceptions import (
    InvalidParameters,
    InvalidWeights,
    MissingFrames,
)
from discern.core.jordan import (
    JordanDecomposition,
    jordan_decompose,
    make_subspace,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DiscriminationProblem:
    """
    Two density operators diagonal in a common Jordan basis.

    rho1 = sum_i alpha_i |psi_i><psi_i| and rho2 = sum_i beta_i |psi_{k+i}><psi_{k+i}|.
    Sectors are ordered by descending cosine; weights follow their sector.
    """
    k: int
    cos_angles: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    jordan: Optional[JordanDecomposition] = None

    @property
    def has_frames(self):
        return self.jordan is not None

    @property
    def cos2_angles(self):
        return self.cos_angles ** 2

    @property
    def is_uniform(self):
        return np.allclose(self.alpha, 1 / self.k, rtol=0, atol=WEIGHT_SUM_TOLERANCE) and \
            np.allclose(self.beta, 1 / self.k, rtol=0, atol=WEIGHT_SUM_TOLERANCE)

    def _require_frames(self):
        if self.jordan is None:
            raise MissingFrames('Problem was given by angles only, explicit subspaces are needed')
        return self.jordan

    def rho1(self):
        jd = self._require_frames()
        return sum(a * np.outer(v, v.conj()) for a, v in zip(self.alpha, jd.basis1))

    def rho2(self):
        jd = self._require_frames()
        return sum(b * np.outer(v, v.conj()) for b, v in zip(self.beta, jd.basis2))

    def swapped(self):
        """The problem with rho1 and rho2 exchanged."""
        return DiscriminationProblem(
            k=self.k,
            cos_angles=self.cos_angles,
            alpha=self.beta,
            beta=self.alpha,
            jordan=self.jordan.swapped() if self.jordan is not None else None,
        )

    @classmethod
    def create(cls, cos_angles, alpha=None, beta=None, jordan=None):
        if jordan is not None:
            cos_angles = jordan.cos_angles
        cos_angles = np.asarray(cos_angles, dtype=float)
        if cos_angles.ndim != 1 or cos_angles.size == 0:
            raise InvalidParameters('At least one Jordan angle is needed')
        k = cos_angles.shape[0]
        if not np.all(np.isfinite(cos_angles)) or np.any(cos_angles < 0) or np.any(cos_angles >= 1):
            raise InvalidParameters(f'Jordan cosines must lie in [0, 1), got {cos_angles.tolist()}')

        alpha = _weights('alpha', alpha, k)
        beta = _weights('beta', beta, k)

        order = np.argsort(-cos_angles, kind='stable')
        if jordan is None and np.any(order != np.arange(k)):
            logger.info('Reordering sectors by descending cosine')
            cos_angles, alpha, beta = cos_angles[order], alpha[order], beta[order]

        return cls(k=k, cos_angles=cos_angles, alpha=alpha, beta=beta, jordan=jordan)

    @classmethod
    def from_angles(cls, cos_angles, alpha=None, beta=None):
        return cls.create(cos_angles, alpha=alpha, beta=beta)

    @classmethod
    def from_subspaces(cls, s1, s2, alpha=None, beta=None, tolerance=GENERAL_POSITION_TOLERANCE):
        jd = jordan_decompose(s1, s2, tolerance=tolerance)
        return cls.create(jd.cos_angles, alpha=alpha, beta=beta, jordan=jd)


def _weights(name, weights, k):
    if weights is None:
        return np.full(k, 1 / k)

    weights = np.asarray(weights, dtype=float)
    if weights.shape != (k,):
        raise InvalidWeights(f'{name}: expected {k} weights, got {weights.size}')
    if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
        raise InvalidWeights(f'{name}: weights must be strictly positive')
    if abs(weights.sum() - 1) > WEIGHT_SUM_TOLERANCE:
        raise InvalidWeights(f'{name}: weights must sum to 1, got {weights.sum()!r}')
    return weights


def basis_state(dimension, index):
    vector = np.zeros(dimension, dtype=complex)
    vector[index] = 1
    return vector


def four_dimensional_vectors():
    """|0>..|3> and |u0> = (|0>+|2>)/sqrt2, |u1> = (|1>+|3>)/sqrt2."""
    e = [basis_state(4, i) for i in range(4)]
    u0 = (e[0] + e[2]) / math.sqrt(2)
    u1 = (e[1] + e[3]) / math.sqrt(2)
    return e, u0, u1


def four_dimensional_example(alpha=None, beta=None):
    """S1 = span{|0>, |1>} against S2 = span{|u0>, |u1>} in C^4, uniformly mixed by default."""
    e, u0, u1 = four_dimensional_vectors()
    s1 = make_subspace(4, [e[0], e[1]])
    s2 = make_subspace(4, [u0, u1])
    return DiscriminationProblem.from_subspaces(s1, s2, alpha=alpha, beta=beta)
