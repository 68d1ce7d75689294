import logging
import math
from dataclasses import dataclass

import numpy as np

from discern.core.constants import (
    FAIL,
    IDENTIFY1,
    IDENTIFY2,
    NORM_TOLERANCE,
    OUTCOMES,
    PROBABILITY_FLOOR,
)
from discern.core.exceptions import InvalidParameters, MissingFrames, UnnormalizedState
from discern.core.linalg import as_vector
from discern.discrimination.optimum import check_prior
from discern.discrimination.povm import build_povm

from .streams import check_seed, pick, shard_ranges, uniforms

logger = logging.getLogger(__name__)

# Column order of probability tables, matches OUTCOMES
FAIL_INDEX, IDENTIFY1_INDEX, IDENTIFY2_INDEX = range(3)

# Uniforms per trial: prior label, spectral component, outcome
TRIAL_WIDTH = 3


def born_probabilities(sol, state):
    """(P(Fail), P(Identify1), P(Identify2)) for a pure state."""
    state = as_vector(state)
    norm = np.linalg.norm(state)
    if abs(norm - 1) > NORM_TOLERANCE:
        raise UnnormalizedState(f'State has norm {norm!r}')
    return outcome_table(sol, [state])[0]


def outcome_table(sol, states):
    """Born probabilities of each state, one row per state, floored and renormalized."""
    states = np.asarray(states, dtype=complex)
    table = np.stack([
        np.real(np.einsum('ni,ij,nj->n', states.conj(), operator, states))
        for operator in (sol.Pi0, sol.Pi1, sol.Pi2)
    ], axis=1)
    table[table < PROBABILITY_FLOOR] = 0
    return table / table.sum(axis=1, keepdims=True)


def choose_outcome(probabilities, u):
    """Identify1 below P1, Identify2 below P1 + P2, Fail above."""
    p1 = probabilities[..., IDENTIFY1_INDEX]
    p2 = probabilities[..., IDENTIFY2_INDEX]
    return np.where(u < p1, IDENTIFY1_INDEX, np.where(u < p1 + p2, IDENTIFY2_INDEX, FAIL_INDEX))


def sample_state(problem, eta, rng):
    """Draw label 1 with probability eta, then |psi_i> with probability alpha_i (beta_i for label 2)."""
    eta = check_prior(eta)
    jd = problem.jordan
    if jd is None:
        raise MissingFrames('Sampling states needs a problem given by explicit subspaces')

    u = rng.random(2)
    if u[0] < eta:
        return 1, jd.basis1[pick(np.cumsum(problem.alpha), u[1])]
    return 2, jd.basis2[pick(np.cumsum(problem.beta), u[1])]


def measure(sol, state, rng):
    probabilities = born_probabilities(sol, state)
    return OUTCOMES[int(choose_outcome(probabilities, rng.random()))]


@dataclass(frozen=True)
class TrialStats:
    trials: int
    identify1: int
    identify2: int
    failures: int
    misidentifications: int
    empirical_failure_rate: float
    expected_failure_rate: float
    z_score: float
    eta: float
    seed: int
    shards: int

    @property
    def counts(self):
        return {FAIL: self.failures, IDENTIFY1: self.identify1, IDENTIFY2: self.identify2}


def z_score(empirical, expected, trials):
    sd = math.sqrt(expected * (1 - expected) / trials)
    if sd == 0:
        return 0.0 if empirical == expected else math.inf
    return (empirical - expected) / sd


def _run_shard(problem, eta, table, seed, start, count):
    u = uniforms(seed, start, count, TRIAL_WIDTH)
    first = u[:, 0] < eta

    sector = np.where(
        first,
        pick(np.cumsum(problem.alpha), u[:, 1]),
        pick(np.cumsum(problem.beta), u[:, 1]),
    )
    probabilities = table[np.where(first, 0, 1), sector]
    outcome = choose_outcome(probabilities, u[:, 2])

    identify1 = outcome == IDENTIFY1_INDEX
    identify2 = outcome == IDENTIFY2_INDEX
    counts = np.array([
        np.sum(identify1),
        np.sum(identify2),
        np.sum(outcome == FAIL_INDEX),
        np.sum(identify1 & ~first) + np.sum(identify2 & first),
    ], dtype=np.int64)

    logger.debug(f'Shard at {start} ({count} trials): {counts.tolist()}')
    return counts


def run_trials(problem, eta, trials, seed, shards=1):
    """
    Sample states from the prior and measure them with the optimal POVM.

    The result depends on the seed only: shards split the trial range
    into contiguous pieces that are merged by summation.
    """
    eta = check_prior(eta)
    seed = check_seed(seed)
    if int(trials) != trials or trials < 1:
        raise InvalidParameters(f'Number of trials must be a positive integer, got {trials!r}')
    trials = int(trials)

    sol = build_povm(problem, eta)
    jd = problem.jordan
    table = np.stack([outcome_table(sol, jd.basis1), outcome_table(sol, jd.basis2)])

    counts = sum(
        _run_shard(problem, eta, table, seed, start, count)
        for start, count in shard_ranges(trials, shards)
    )
    identify1, identify2, failures, misidentifications = (int(c) for c in counts)

    if misidentifications:
        logger.error(f'{misidentifications} misidentifications in {trials} trials at eta={eta}')

    empirical = failures / trials
    return TrialStats(
        trials=trials,
        identify1=identify1,
        identify2=identify2,
        failures=failures,
        misidentifications=misidentifications,
        empirical_failure_rate=empirical,
        expected_failure_rate=sol.Q_total,
        z_score=z_score(empirical, sol.Q_total, trials),
        eta=eta,
        seed=seed,
        shards=int(shards),
    )
