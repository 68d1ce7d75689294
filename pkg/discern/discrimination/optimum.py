"""
Closed-form optimum of unambiguous discrimination, sector by sector.

In sector i the failure probabilities conditioned on psi_i and
psi_{k+i} obey q_i * q_{k+i} = cos^2(theta_i). Minimizing
eta*alpha_i*q_i + (1 - eta)*beta_i*q_{k+i} gives an interior optimum
while eta lies in I_i = [c_i, d_i] and a projective measurement outside.
"""
import math
from dataclasses import dataclass

import numpy as np

from discern.core.constants import (
    REGIME_ABOVE,
    REGIME_BELOW,
    REGIME_INTERIOR,
)
from discern.core.exceptions import InvalidPrior


@dataclass(frozen=True)
class SectorInterval:
    c: float
    d: float

    def contains(self, eta):
        return self.c <= eta <= self.d

    def as_list(self):
        return [self.c, self.d]


@dataclass(frozen=True, eq=False)
class SectorSolution:
    index: int
    regime: str
    q1_bar: float
    q2_bar: float
    lam: float
    # Coefficients of |zeta_i> on (|psi_i>, |psi_{k+i}>), unit norm in the Hilbert space
    zeta: np.ndarray
    sector_prior: float
    cond_prob1: float
    cond_prob2: float
    interval: SectorInterval
    # sector_prior * (cond_prob1 * q1_bar + cond_prob2 * q2_bar)
    contribution: float

    @property
    def failure(self):
        return self.cond_prob1 * self.q1_bar + self.cond_prob2 * self.q2_bar

    def zeta_vector(self, jordan):
        psi1, psi2 = jordan.sector_basis(self.index - 1)
        return self.zeta[0] * psi1 + self.zeta[1] * psi2


def check_prior(eta):
    try:
        eta = float(eta)
    except (TypeError, ValueError):
        raise InvalidPrior(f'Prior must be a number, got {eta!r}')
    if not math.isfinite(eta) or eta < 0 or eta > 1:
        raise InvalidPrior(f'Prior must lie in [0, 1], got {eta!r}')
    return eta


def interval_for(alpha, beta, cos2):
    return SectorInterval(
        c=beta * cos2 / (alpha + beta * cos2),
        d=beta / (beta + alpha * cos2),
    )


def regime_for(eta, interval):
    """Interior on the closed interval, except that eta = 0 and 1 are always projective."""
    if 0 < eta < 1 and interval.contains(eta):
        return REGIME_INTERIOR
    if eta <= interval.c:
        return REGIME_BELOW
    return REGIME_ABOVE


def sector_intervals(problem):
    return [
        interval_for(a, b, c * c)
        for a, b, c in zip(problem.alpha, problem.beta, problem.cos_angles)
    ]


def _failure_pair(regime, eta, alpha, beta, cos):
    cos2 = cos * cos
    if regime == REGIME_BELOW:
        return 1.0, cos2
    if regime == REGIME_ABOVE:
        return cos2, 1.0
    q1 = math.sqrt((1 - eta) * beta / (eta * alpha)) * cos
    q2 = math.sqrt(eta * alpha / ((1 - eta) * beta)) * cos
    return min(max(q1, cos2), 1.0), min(max(q2, cos2), 1.0)


def _zeta(q1, q2, cos):
    """
    Eigenvalue and unit eigenvector of the rank one operator Pi0 restricted to a sector.

    In the orthonormal sector basis (psi_i, y_i) Pi0 has entries
    m11 = q1, m12 = (1 - q1) cos/sin and m22 = (q1 cos^2 + q2 - 2 cos^2)/sin^2.
    The eigenvector is read off the column with the larger diagonal entry
    and rewritten on (psi_i, psi_{k+i}).
    """
    cos2 = cos * cos
    sin2 = 1 - cos2
    sin = math.sqrt(sin2)

    m11 = q1
    m12 = (1 - q1) * cos / sin
    m22 = (q1 * cos2 + q2 - 2 * cos2) / sin2
    lam = max((q1 + q2 - 2 * cos2) / sin2, 0.0)

    x, w = (m11, m12) if m11 >= m22 else (m12, m22)
    norm = math.hypot(x, w)
    if norm < 1e-15:
        # Pi0 vanishes on this sector, any direction will do
        x, w = 1.0, 0.0
    else:
        x, w = x / norm, w / norm

    return lam, np.array([x - w * cos / sin, w / sin], dtype=complex)


def optimal_profile(problem, eta):
    eta = check_prior(eta)
    sectors = []
    for i, (a, b, cos) in enumerate(zip(problem.alpha, problem.beta, problem.cos_angles)):
        interval = interval_for(a, b, cos * cos)
        regime = regime_for(eta, interval)
        q1, q2 = _failure_pair(regime, eta, a, b, cos)
        lam, zeta = _zeta(q1, q2, cos)
        prior = eta * a + (1 - eta) * b
        sectors.append(SectorSolution(
            index=i + 1,
            regime=regime,
            q1_bar=q1,
            q2_bar=q2,
            lam=lam,
            zeta=zeta,
            sector_prior=prior,
            cond_prob1=eta * a / prior,
            cond_prob2=(1 - eta) * b / prior,
            interval=interval,
            contribution=eta * a * q1 + (1 - eta) * b * q2,
        ))
    return sectors


def failure_probability(problem, eta):
    return math.fsum(sector.contribution for sector in optimal_profile(problem, eta))


def fidelity(problem):
    return math.fsum(
        math.sqrt(a * b) * c for a, b, c in zip(problem.alpha, problem.beta, problem.cos_angles)
    )


def fidelity_bound(problem, eta):
    eta = check_prior(eta)
    return 2 * math.sqrt(eta * (1 - eta)) * fidelity(problem)


def saturation_interval(problem):
    intervals = sector_intervals(problem)
    low = max(interval.c for interval in intervals)
    high = min(interval.d for interval in intervals)
    if low > high:
        return None
    return SectorInterval(c=low, d=high)


def failure_curve(problem, points):
    """Rows of (eta, Q(eta), fidelity bound) on a uniform grid over [0, 1]."""
    if int(points) != points or points < 2:
        raise InvalidPrior(f'A failure curve needs at least two points, got {points}')
    points = int(points)
    rows = []
    for j in range(points):
        eta = j / (points - 1)
        rows.append((eta, failure_probability(problem, eta), fidelity_bound(problem, eta)))
    return rows
