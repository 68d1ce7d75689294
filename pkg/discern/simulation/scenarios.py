"""
Applications of the four-dimensional example at prior 1/2.

Key sharing: Charlie prepares one of two entangled pairs whose reduced
states are the uniform mixtures on S1 and S2, and sends one particle to
Alice and one to Bob. Black box: Bob decides which of two two-qubit boxes
Alice applied to an unknown single-qubit rotation.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from discern.core.constants import OUTCOMES, PROBABILITY_FLOOR
from discern.core.exceptions import InvalidParameters
from discern.discrimination.povm import build_povm
from discern.discrimination.problem import four_dimensional_example, four_dimensional_vectors

from .streams import check_seed, pick, uniforms
from .trials import FAIL_INDEX, IDENTIFY1_INDEX, IDENTIFY2_INDEX, choose_outcome, outcome_table

logger = logging.getLogger(__name__)

EXAMPLE_PRIOR = 0.5

# Charlie's bit, the joint outcome, Eve's two resend choices, Alice, Bob
KEY_SHARING_WIDTH = 6

# Box choice, two Box-Muller pairs, outcome
BLACK_BOX_WIDTH = 6

# Ideal single-party success probability at prior 1/2
EXAMPLE_SUCCESS = (2 - math.sqrt(2)) / 2

# Two-qubit basis index 2*q1 + q2 to the example basis: |00>, |01>, |10>, |11> -> |0>, |1>, |3>, |2>
TWO_QUBIT_TO_EXAMPLE = (0, 1, 3, 2)


def example_povm():
    return build_povm(four_dimensional_example(), EXAMPLE_PRIOR)


def _check_count(name, value):
    if int(value) != value or value < 1:
        raise InvalidParameters(f'Number of {name} must be a positive integer, got {value!r}')
    return int(value)


def key_sharing_states():
    """(|0>|1> + |1>|0>)/sqrt2 and (|u0>|u1> + |u1>|u0>)/sqrt2 on C^4 x C^4."""
    e, u0, u1 = four_dimensional_vectors()
    psi0 = (np.kron(e[0], e[1]) + np.kron(e[1], e[0])) / math.sqrt(2)
    psi1 = (np.kron(u0, u1) + np.kron(u1, u0)) / math.sqrt(2)
    return psi0, psi1


def reduced_density_matrix(state, dims=(4, 4), keep=0):
    """Partial trace of a pure bipartite state onto particle keep."""
    if keep not in (0, 1):
        raise InvalidParameters(f'keep must be 0 or 1, got {keep!r}')
    amplitudes = np.asarray(state, dtype=complex)
    if amplitudes.shape != (dims[0] * dims[1],):
        raise InvalidParameters(f'State of shape {amplitudes.shape} does not fit dimensions {dims}')
    matrix = amplitudes.reshape(dims)
    if keep == 0:
        return matrix @ matrix.conj().T
    return matrix.T @ matrix.conj()


def joint_distribution(state, povm):
    """
    <Psi|Pi_a (x) Pi_b|Psi> for a, b in (Fail, Identify1, Identify2).

    Computed as <M, Pi_a M Pi_b^T> with M the 4x4 amplitude matrix of Psi.
    """
    matrix = np.asarray(state, dtype=complex).reshape(4, 4)
    operators = (povm.Pi0, povm.Pi1, povm.Pi2)
    table = np.array([
        [np.real(np.vdot(matrix, a @ matrix @ b.T)) for b in operators]
        for a in operators
    ])
    table[table < PROBABILITY_FLOOR] = 0
    return table / table.sum()


def _party_bit(outcome):
    """Identify1 means S1 and bit 0, Identify2 means S2 and bit 1."""
    return np.where(outcome == IDENTIFY2_INDEX, 1, 0)


class Eavesdropper:
    """
    Intercepts both particles of a round and sends Alice and Bob one
    single-particle state each, chosen from resend_candidates().
    """
    name = None

    def __init__(self, povm):
        self.povm = povm

    @staticmethod
    def resend_candidates():
        e, u0, u1 = four_dimensional_vectors()
        return e + [u0, u1]

    def resend(self, bits, u):
        """Candidate indices (for Alice, for Bob) per round; u holds three uniforms per round."""
        raise NotImplementedError


class InterceptResend(Eavesdropper):
    """
    Eve measures both particles with the optimal POVM. On Identify1 she
    resends |0> or |1>, on Identify2 |u0> or |u1>, each with probability
    1/2; on failure she resends a uniformly random basis state.
    """
    name = 'intercept-resend'

    def __init__(self, povm):
        super().__init__(povm)
        self.joint = np.stack([joint_distribution(state, povm).ravel() for state in key_sharing_states()])

    def _candidate(self, outcome, u):
        coin = (u >= 0.5).astype(int)
        basis = np.minimum((4 * u).astype(int), 3)
        return np.where(
            outcome == IDENTIFY1_INDEX, coin,
            np.where(outcome == IDENTIFY2_INDEX, 4 + coin, basis),
        )

    def resend(self, bits, u):
        cumulative = np.cumsum(self.joint, axis=1)
        joint = np.where(bits == 0, pick(cumulative[0], u[:, 0]), pick(cumulative[1], u[:, 0]))
        first, second = np.divmod(joint, 3)
        return self._candidate(first, u[:, 1]), self._candidate(second, u[:, 2])


EAVESDROPPERS = {cls.name: cls for cls in (InterceptResend,)}


@dataclass(frozen=True)
class KeySharingReport:
    rounds: int
    valid_bits: int
    bit_values: str
    alice_success_rate: float
    bob_success_rate: float
    valid_rate: float
    eve_enabled: bool
    eve: Optional[str]
    disturbance_detected: int
    invalid_bits_revealed: int
    seed: int


def scenario_key_sharing(rounds, seed, eve=None):
    """
    Simulate key sharing; eve is an Eavesdropper subclass, its name, or None.

    Honest rounds sample the exact joint outcome distribution of the
    entangled pair. With Eve, Alice and Bob measure her two resent states
    independently.
    """
    rounds = _check_count('rounds', rounds)
    seed = check_seed(seed)
    povm = example_povm()

    if isinstance(eve, str):
        try:
            eve = EAVESDROPPERS[eve]
        except KeyError:
            raise InvalidParameters(f'Unknown eavesdropper {eve!r}, choose from {", ".join(EAVESDROPPERS)}')

    u = uniforms(seed, 0, rounds, KEY_SHARING_WIDTH)
    bits = (u[:, 0] >= 0.5).astype(int)

    if eve is None:
        joint = np.stack([joint_distribution(state, povm).ravel() for state in key_sharing_states()])
        cumulative = np.cumsum(joint, axis=1)
        index = np.where(bits == 0, pick(cumulative[0], u[:, 1]), pick(cumulative[1], u[:, 1]))
        alice, bob = np.divmod(index, 3)
    else:
        eavesdropper = eve(povm)
        to_alice, to_bob = eavesdropper.resend(bits, u[:, 1:4])
        table = outcome_table(povm, eavesdropper.resend_candidates())
        alice = choose_outcome(table[to_alice], u[:, 4])
        bob = choose_outcome(table[to_bob], u[:, 5])

    alice_ok, bob_ok = alice != FAIL_INDEX, bob != FAIL_INDEX
    valid = alice_ok & bob_ok
    contradicted = (alice_ok & (_party_bit(alice) != bits)) | (bob_ok & (_party_bit(bob) != bits))
    bit_values = ''.join(str(b) for b in _party_bit(alice[valid]))

    report = KeySharingReport(
        rounds=rounds,
        valid_bits=int(valid.sum()),
        bit_values=bit_values,
        alice_success_rate=float(alice_ok.mean()),
        bob_success_rate=float(bob_ok.mean()),
        valid_rate=float(valid.mean()),
        eve_enabled=eve is not None,
        eve=eve.name if eve is not None else None,
        disturbance_detected=int(contradicted.sum()),
        invalid_bits_revealed=int((alice_ok ^ bob_ok).sum()),
        seed=seed,
    )
    logger.info(
        f'Key sharing over {rounds} rounds: {report.valid_bits} valid bits, '
        f'{report.disturbance_detected} disturbed rounds'
    )
    return report


def _gaussian_pair(u, v):
    radius = np.sqrt(-2 * np.log1p(-u))
    return radius * np.cos(2 * np.pi * v), radius * np.sin(2 * np.pi * v)


def box_outputs(box, a, b):
    """
    Example-basis output states of the two boxes fed U|0> = a|0> + b|1>.

    Box 1 leaves |0> on the first qubit; box 2 applies a Hadamard to it and
    then a controlled-NOT with the first qubit as control.
    """
    states = np.zeros((len(box), 4), dtype=complex)
    first = box == 1
    # Box 1: |0>(a|0> + b|1>)
    states[first, 0], states[first, 1] = a[first], b[first]
    # Box 2: (|0>(a|0> + b|1>) + |1>(a|1> + b|0>))/sqrt2
    second = ~first
    h = 1 / math.sqrt(2)
    two_qubit = np.zeros((int(second.sum()), 4), dtype=complex)
    two_qubit[:, 0], two_qubit[:, 1] = h * a[second], h * b[second]
    two_qubit[:, 2], two_qubit[:, 3] = h * b[second], h * a[second]
    states[np.ix_(second, TWO_QUBIT_TO_EXAMPLE)] = two_qubit
    return states


@dataclass
class BlackBoxReport:
    trials: int
    box1_trials: int
    box2_trials: int
    successes: int
    misidentifications: int
    success_rate: float
    box1_success_rate: float
    box2_success_rate: float
    expected_success_rate: float
    max_probability_deviation: float
    seed: int
    records: List[dict] = field(default_factory=list)


def scenario_black_box(trials, seed, include_trials=False):
    trials = _check_count('trials', trials)
    seed = check_seed(seed)
    povm = example_povm()

    u = uniforms(seed, 0, trials, BLACK_BOX_WIDTH)
    box = np.where(u[:, 0] < 0.5, 1, 2)

    g0, g1 = _gaussian_pair(u[:, 1], u[:, 2])
    g2, g3 = _gaussian_pair(u[:, 3], u[:, 4])
    a, b = g0 + 1j * g1, g2 + 1j * g3
    norm = np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2)
    degenerate = norm == 0
    a = np.where(degenerate, 1, a / np.where(degenerate, 1, norm))
    b = np.where(degenerate, 0, b / np.where(degenerate, 1, norm))

    probabilities = outcome_table(povm, box_outputs(box, a, b))
    outcome = choose_outcome(probabilities, u[:, 5])

    correct = np.where(box == 1, IDENTIFY1_INDEX, IDENTIFY2_INDEX)
    success = outcome == correct
    wrong = (outcome != FAIL_INDEX) & ~success
    analytic = np.where(box == 1, probabilities[:, IDENTIFY1_INDEX], probabilities[:, IDENTIFY2_INDEX])

    def rate(mask):
        return float(success[mask].mean()) if mask.any() else 0.0

    records = []
    if include_trials:
        records = [
            {
                'index': i,
                'box': int(box[i]),
                'outcome': OUTCOMES[int(outcome[i])],
                'success_probability': float(analytic[i]),
            }
            for i in range(trials)
        ]

    report = BlackBoxReport(
        trials=trials,
        box1_trials=int((box == 1).sum()),
        box2_trials=int((box == 2).sum()),
        successes=int(success.sum()),
        misidentifications=int(wrong.sum()),
        success_rate=float(success.mean()),
        box1_success_rate=rate(box == 1),
        box2_success_rate=rate(box == 2),
        expected_success_rate=EXAMPLE_SUCCESS,
        max_probability_deviation=float(np.max(np.abs(analytic - EXAMPLE_SUCCESS))),
        seed=seed,
        records=records,
    )
    logger.info(f'Black box over {trials} trials: success rate {report.success_rate}')
    return report
