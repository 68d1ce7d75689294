import math

import numpy as np
from django.test import SimpleTestCase

from discern.core.exceptions import InvalidProblemFile

from ..forms import ProblemFileForm, problem_from_data

H = 1 / math.sqrt(2)

EXAMPLE = {
    'ambient_dim': 4,
    's1_basis': [
        [[1, 0], [0, 0], [0, 0], [0, 0]],
        [[0, 0], [1, 0], [0, 0], [0, 0]],
    ],
    's2_basis': [
        [[H, 0], [0, 0], [H, 0], [0, 0]],
        [[0, 0], [H, 0], [0, 0], [H, 0]],
    ],
}


class ProblemFileFormTestCase(SimpleTestCase):

    def test_subspace_form(self):
        form = ProblemFileForm(data=EXAMPLE)
        self.assertTrue(form.is_valid(), form.errors)
        problem = form.cleaned_data['problem']
        self.assertEqual(problem.k, 2)
        self.assertTrue(problem.has_frames)
        np.testing.assert_allclose(problem.cos_angles, [H, H], atol=1e-14)

    def test_complex_entries(self):
        data = {
            'ambient_dim': 2,
            's1_basis': [[[1, 0], [0, 0]]],
            's2_basis': [[[H, 0], [0, H]]],
        }
        problem = problem_from_data(data)
        self.assertAlmostEqual(problem.cos_angles[0], H, places=14)

    def test_angle_form_with_weights(self):
        problem = problem_from_data({'cos_angles': [0.5, 0.8], 'alpha': [0.25, 0.75], 'beta': [0.5, 0.5]})
        self.assertFalse(problem.has_frames)
        np.testing.assert_array_equal(problem.cos_angles, [0.8, 0.5])
        np.testing.assert_array_equal(problem.alpha, [0.75, 0.25])

    def test_both_forms(self):
        form = ProblemFileForm(data=dict(EXAMPLE, cos_angles=[0.5, 0.5]))
        self.assertFalse(form.is_valid())
        self.assertEqual(form.errors, {'__all__': ['Give either subspaces or cos_angles, not both']})

    def test_neither_form(self):
        form = ProblemFileForm(data={'alpha': [1]})
        self.assertFalse(form.is_valid())
        self.assertEqual(
            form.errors, {'__all__': ['Give either ambient_dim, s1_basis and s2_basis, or cos_angles']}
        )

    def test_incomplete_subspace_form(self):
        form = ProblemFileForm(data={'ambient_dim': 4, 's1_basis': EXAMPLE['s1_basis']})
        self.assertFalse(form.is_valid())
        self.assertEqual(form.errors, {'__all__': ['Subspace form is missing: s2_basis']})

    def test_unknown_fields(self):
        form = ProblemFileForm(data={'cos_angles': [0.5], 'eta': 0.5})
        self.assertFalse(form.is_valid())
        self.assertEqual(form.errors, {'__all__': ['Unknown fields: eta']})

    def test_malformed_vectors(self):
        form = ProblemFileForm(data=dict(EXAMPLE, s1_basis=[[[1, 0, 0]]]))
        self.assertFalse(form.is_valid())
        self.assertIn('s1_basis', form.errors)

    def test_small_ambient_dimension(self):
        form = ProblemFileForm(data=dict(EXAMPLE, ambient_dim=1))
        self.assertFalse(form.is_valid())
        self.assertIn('ambient_dim', form.errors)

    def test_cos_angles_must_be_a_list(self):
        for value in (0.5, ['a'], [True]):
            form = ProblemFileForm(data={'cos_angles': value})
            self.assertFalse(form.is_valid())
            self.assertIn('cos_angles', form.errors)

    def test_library_errors_become_form_errors(self):
        form = ProblemFileForm(data={'cos_angles': [0.5, 0.2], 'alpha': [0.5, 0.6]})
        self.assertFalse(form.is_valid())
        self.assertTrue(form.errors['__all__'][0].startswith('InvalidWeights: '))

    def test_tolerance_is_passed_on(self):
        data = {
            'ambient_dim': 2,
            's1_basis': [[[1, 0], [0, 0]]],
            's2_basis': [[[1, 0], [1e-3, 0]]],
        }
        self.assertTrue(ProblemFileForm(data=data).is_valid())
        form = ProblemFileForm(data=data, tolerance=1e-3)
        self.assertFalse(form.is_valid())
        self.assertTrue(form.errors['__all__'][0].startswith('NotGeneralPosition: '))


class ProblemFromDataTestCase(SimpleTestCase):

    def test_not_an_object(self):
        with self.assertRaises(InvalidProblemFile) as raised:
            problem_from_data([0.5])
        self.assertEqual(str(raised.exception), 'A problem file must hold a JSON object')

    def test_errors_are_collected(self):
        with self.assertRaises(InvalidProblemFile) as raised:
            problem_from_data({'ambient_dim': 4, 's1_basis': EXAMPLE['s1_basis']})
        self.assertIn('__all__', raised.exception.errors)
        self.assertEqual(str(raised.exception), 'Subspace form is missing: s2_basis')
