import math

import numpy as np
from django.test import SimpleTestCase

from discern.core.exceptions import InvalidParameters, InvalidPrior, MissingFrames, UnnormalizedState
from discern.discrimination.factory import DiscriminationProblemFactory
from discern.discrimination.povm import build_povm
from discern.discrimination.problem import DiscriminationProblem, basis_state, four_dimensional_example

from ..trials import born_probabilities, measure, outcome_table, run_trials, sample_state, z_score


class BornProbabilitiesTestCase(SimpleTestCase):

    def setUp(self):
        self.problem = four_dimensional_example()
        self.sol = build_povm(self.problem, 0.5)

    def test_s1_states_never_identify_s2(self):
        for psi in self.problem.jordan.basis1:
            fail, identify1, identify2 = born_probabilities(self.sol, psi)
            self.assertEqual(identify2, 0)
            self.assertAlmostEqual(fail, 1 / math.sqrt(2), places=12)
            self.assertAlmostEqual(identify1, 1 - 1 / math.sqrt(2), places=12)

    def test_rows_sum_to_one(self):
        rng = np.random.default_rng(0)
        states = rng.standard_normal((20, 4)) + 1j * rng.standard_normal((20, 4))
        states /= np.linalg.norm(states, axis=1, keepdims=True)
        table = outcome_table(self.sol, states)
        np.testing.assert_allclose(table.sum(axis=1), 1, atol=1e-14)
        self.assertTrue(np.all(table >= 0))

    def test_unnormalized_state(self):
        with self.assertRaises(UnnormalizedState):
            born_probabilities(self.sol, 2 * basis_state(4, 0))

    def test_measure(self):
        rng = np.random.Generator(np.random.Philox(4))
        outcomes = [measure(self.sol, basis_state(4, 0), rng) for _ in range(200)]
        self.assertEqual(set(outcomes) - {'Fail', 'Identify1'}, set())

    def test_sample_state(self):
        rng = np.random.Generator(np.random.Philox(5))
        labels = [sample_state(self.problem, 1, rng)[0] for _ in range(20)]
        self.assertEqual(set(labels), {1})
        label, state = sample_state(self.problem, 0, rng)
        self.assertEqual(label, 2)
        self.assertAlmostEqual(np.linalg.norm(state), 1, places=14)

    def test_sample_state_frequencies(self):
        rng = np.random.Generator(np.random.Philox(6))
        jd = self.problem.jordan
        basis = list(jd.basis1) + list(jd.basis2)
        draws = 40000
        labels, counts = 0, np.zeros(4)
        for _ in range(draws):
            label, state = sample_state(self.problem, 0.5, rng)
            labels += label == 1
            counts[np.argmax([abs(np.vdot(v, state)) for v in basis])] += 1
        self.assertLessEqual(abs(labels / draws - 0.5), 4 * math.sqrt(0.25 / draws))
        self.assertLessEqual(np.max(np.abs(counts / draws - 0.25)), 4 * math.sqrt(0.25 * 0.75 / draws))

    def test_sample_state_needs_frames(self):
        rng = np.random.Generator(np.random.Philox(5))
        with self.assertRaises(MissingFrames):
            sample_state(DiscriminationProblem.from_angles([0.5]), 0.5, rng)


class RunTrialsTestCase(SimpleTestCase):

    def test_example(self):
        stats = run_trials(four_dimensional_example(), 0.5, 100000, seed=2024)
        self.assertEqual(stats.misidentifications, 0)
        self.assertEqual(stats.identify1 + stats.identify2 + stats.failures, 100000)
        self.assertAlmostEqual(stats.expected_failure_rate, 1 / math.sqrt(2), places=12)
        self.assertLessEqual(abs(stats.z_score), 4)

    def test_random_problems(self):
        for k in (1, 3):
            problem = DiscriminationProblemFactory(sectors=k, seed=k)
            for eta in (0.2, 0.6):
                stats = run_trials(problem, eta, 20000, seed=k)
                self.assertEqual(stats.misidentifications, 0)
                self.assertLessEqual(abs(stats.z_score), 4)

    def test_deterministic(self):
        problem = four_dimensional_example()
        self.assertEqual(run_trials(problem, 0.4, 5000, seed=9), run_trials(problem, 0.4, 5000, seed=9))
        self.assertNotEqual(
            run_trials(problem, 0.4, 5000, seed=9).counts, run_trials(problem, 0.4, 5000, seed=10).counts
        )

    def test_shards_give_the_same_counts(self):
        problem = DiscriminationProblemFactory(sectors=2, seed=3)
        single = run_trials(problem, 0.5, 10001, seed=77)
        for shards in (2, 3, 16):
            sharded = run_trials(problem, 0.5, 10001, seed=77, shards=shards)
            self.assertEqual(sharded.counts, single.counts)
            self.assertEqual(sharded.misidentifications, single.misidentifications)
            self.assertEqual(sharded.shards, shards)

    def test_certain_priors(self):
        problem = four_dimensional_example()
        first = run_trials(problem, 1, 2000, seed=1)
        self.assertEqual(first.identify2, 0)
        self.assertAlmostEqual(first.expected_failure_rate, 0.5, places=12)
        second = run_trials(problem, 0, 2000, seed=1)
        self.assertEqual(second.identify1, 0)

    def test_invalid_arguments(self):
        problem = four_dimensional_example()
        with self.assertRaises(InvalidPrior):
            run_trials(problem, 1.5, 10, seed=1)
        with self.assertRaises(InvalidParameters):
            run_trials(problem, 0.5, 0, seed=1)
        with self.assertRaises(InvalidParameters):
            run_trials(problem, 0.5, 10, seed=-3)
        with self.assertRaises(MissingFrames):
            run_trials(DiscriminationProblem.from_angles([0.5]), 0.5, 10, seed=1)


class ZScoreTestCase(SimpleTestCase):

    def test_values(self):
        self.assertAlmostEqual(z_score(0.55, 0.5, 100), 1, places=12)
        self.assertEqual(z_score(0, 0, 10), 0)
        self.assertEqual(z_score(0.1, 0, 10), math.inf)
