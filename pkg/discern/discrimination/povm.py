"""
Assembly and validation of the optimal unambiguous POVM.

Pi1 = sum_i (1 - q_i)/sin^2(theta_i) |z_i><z_i|
Pi2 = sum_i (1 - q_{k+i})/sin^2(theta_i) |y_i><y_i|
Pi0 = sum_i lambda_i |zeta_i><zeta_i|
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from discern.core.constants import (
    COMPLETENESS_TOLERANCE,
    CONSISTENCY_TOLERANCE,
    HERMITIAN_TOLERANCE,
    POSITIVITY_TOLERANCE,
    RANK_TOLERANCE,
    UNAMBIGUITY_TOLERANCE,
)
from discern.core.exceptions import MissingFrames
from discern.core.linalg import hermitian_eig, max_norm

from .optimum import check_prior, fidelity, optimal_profile, saturation_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PovmSolution:
    eta: float
    sectors: list
    Q_total: float
    fidelity: float
    fidelity_bound: float
    saturates_bound: bool
    # Tr(rho1 Pi0) and Tr(rho2 Pi0)
    failure1: float
    failure2: float
    Pi0: Optional[np.ndarray] = None
    Pi1: Optional[np.ndarray] = None
    Pi2: Optional[np.ndarray] = None

    @property
    def has_matrices(self):
        return self.Pi0 is not None

    @property
    def success_probability(self):
        return 1 - self.Q_total

    @property
    def operators(self):
        return {'Pi0': self.Pi0, 'Pi1': self.Pi1, 'Pi2': self.Pi2}


def _assemble(problem, sectors):
    jd = problem.jordan
    dimension = jd.ambient_dim
    pi0 = np.zeros((dimension, dimension), dtype=complex)
    pi1 = np.zeros((dimension, dimension), dtype=complex)
    pi2 = np.zeros((dimension, dimension), dtype=complex)

    for sector, z, y, cos in zip(sectors, jd.z_frame, jd.y_frame, jd.cos_angles):
        sin2 = 1 - cos * cos
        pi1 += (1 - sector.q1_bar) / sin2 * np.outer(z, z.conj())
        pi2 += (1 - sector.q2_bar) / sin2 * np.outer(y, y.conj())
        zeta = sector.zeta_vector(jd)
        pi0 += sector.lam * np.outer(zeta, zeta.conj())

    return pi0, pi1, pi2


def solve(problem, eta):
    """
    The optimal measurement at prior eta.

    Works from angles alone; the operators are only assembled when the
    problem carries explicit Jordan frames.
    """
    eta = check_prior(eta)
    sectors = optimal_profile(problem, eta)
    q_total = math.fsum(s.contribution for s in sectors)
    f = fidelity(problem)
    bound = 2 * math.sqrt(eta * (1 - eta)) * f

    saturation = saturation_interval(problem)
    matrices = _assemble(problem, sectors) if problem.has_frames else (None, None, None)

    logger.debug(f'Solved k={problem.k} at eta={eta}: Q={q_total}, bound={bound}')

    return PovmSolution(
        eta=eta,
        sectors=sectors,
        Q_total=q_total,
        fidelity=f,
        fidelity_bound=bound,
        saturates_bound=saturation is not None and saturation.contains(eta),
        failure1=math.fsum(a * s.q1_bar for a, s in zip(problem.alpha, sectors)),
        failure2=math.fsum(b * s.q2_bar for b, s in zip(problem.beta, sectors)),
        Pi0=matrices[0],
        Pi1=matrices[1],
        Pi2=matrices[2],
    )


def build_povm(problem, eta):
    if not problem.has_frames:
        raise MissingFrames('Building POVM matrices needs a problem given by explicit subspaces')
    return solve(problem, eta)


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool


@dataclass
class ValidationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def add(self, name, value, tolerance, passed):
        self.checks.append(CheckResult(name=name, value=float(value), tolerance=tolerance, passed=bool(passed)))

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name):
        return any(check.name == name for check in self.checks)


def _expectation(operator, vector):
    return float(np.real(np.vdot(vector, operator @ vector)))


def validate_povm(sol, problem):
    """Check a solution against the POVM conditions, recording every residual."""
    if not sol.has_matrices:
        raise MissingFrames('Only solutions with assembled operators can be validated')

    report = ValidationReport()
    jd = problem.jordan
    identity = np.eye(jd.ambient_dim)

    report.add(
        'completeness',
        max_norm(sol.Pi0 + sol.Pi1 + sol.Pi2 - identity),
        COMPLETENESS_TOLERANCE,
        max_norm(sol.Pi0 + sol.Pi1 + sol.Pi2 - identity) <= COMPLETENESS_TOLERANCE,
    )

    eigenvalues = {}
    for name, operator in sol.operators.items():
        asymmetry = max_norm(operator - operator.conj().T)
        report.add(f'hermiticity_{name.lower()}', asymmetry, HERMITIAN_TOLERANCE, asymmetry <= HERMITIAN_TOLERANCE)
        eigenvalues[name] = hermitian_eig((operator + operator.conj().T) / 2).eigenvalues
        smallest = eigenvalues[name][-1]
        report.add(f'min_eigenvalue_{name.lower()}', smallest, POSITIVITY_TOLERANCE, smallest >= -POSITIVITY_TOLERANCE)

    rho1, rho2 = problem.rho1(), problem.rho2()
    for name, value in (
        ('unambiguity_pi1_rho2', abs(np.trace(sol.Pi1 @ rho2))),
        ('unambiguity_pi2_rho1', abs(np.trace(sol.Pi2 @ rho1))),
    ):
        report.add(name, value, UNAMBIGUITY_TOLERANCE, value <= UNAMBIGUITY_TOLERANCE)

    rank = int(np.sum(eigenvalues['Pi0'] > RANK_TOLERANCE))
    report.add('rank_pi0', rank, problem.k, rank <= problem.k)

    predicted = sol.eta * np.real(np.trace(sol.Pi0 @ rho1)) + (1 - sol.eta) * np.real(np.trace(sol.Pi0 @ rho2))
    consistency = abs(predicted - sol.Q_total)
    report.add('q_consistency', consistency, CONSISTENCY_TOLERANCE, consistency <= CONSISTENCY_TOLERANCE)

    for name, basis, success in (
        ('complement_rho1', jd.basis1, sol.Pi1),
        ('complement_rho2', jd.basis2, sol.Pi2),
    ):
        residual = max(
            abs(_expectation(success, psi) + _expectation(sol.Pi0, psi) - 1) for psi in basis
        )
        report.add(name, residual, COMPLETENESS_TOLERANCE, residual <= COMPLETENESS_TOLERANCE)

    if not report.passed:
        logger.warning(f'POVM validation failed: {", ".join(c.name for c in report.failures)}')

    return report
